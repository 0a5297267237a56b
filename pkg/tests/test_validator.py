from mecheck.rsl.parser import parse_rule
from mecheck.rsl.validator import validate_rule

CLEAN = """\
Rule ok {
  for (file x in getXMLs()) {
    for (<bean> b in getElms(x, "bean")) {
      String cn = getAttr(b, "class");
      if (classExists(cn)) {
        class c = locateClassFQN(cn);
        assert (exists (method m in getMethods(c)) (getName(m) == cn)) {
          msg("no %s", cn);
        }
      }
    }
  }
}
"""


def codes(source):
    return [(d.code, d.message) for d in validate_rule(parse_rule(source))]


def test_clean_rule_has_no_diagnostics():
    assert codes(CLEAN) == []


def test_every_shipped_builtin_name_is_known():
    # the clean listing exercises a handful; unknown names are the error case
    diags = codes('Rule a { String x = getNme(y); }')
    assert any(code == "unknown-builtin" for code, _ in diags)
    assert any("getNme" in message for _, message in diags)


def test_builtin_names_are_case_sensitive():
    diags = codes('Rule a { if (classexists("C")) { String q = join("a", "b"); } }')
    assert any(code == "unknown-builtin" and "classexists" in message for code, message in diags)


def test_undeclared_variable():
    diags = codes('Rule a { String x = getName(ghost); }')
    assert [code for code, _ in diags] == ["undeclared-variable"]
    assert "ghost" in diags[0][1]


def test_declared_variable_not_visible_before_decl():
    src = """\
Rule a {
  String x = getName(y);
  class y = locateClassFQN("C");
}
"""
    diags = codes(src)
    assert any(code == "undeclared-variable" and "y" in message for code, message in diags)


def test_for_variable_scoped_to_body():
    src = """\
Rule a {
  for (method m in getMethods(c)) {
    String x = getName(m);
  }
  String y = getName(m);
}
"""
    diags = codes(src.replace("getMethods(c)", 'getMethods(locateClassFQN("C"))'))
    assert [code for code, _ in diags] == ["undeclared-variable"]
    assert "m" in diags[0][1]


def test_exists_variable_scoped_to_predicate():
    src = """\
Rule a {
  if (exists (method m in getMethods(locateClassFQN("C"))) (isEmpty(getName(m)))) {
    String x = getName(m);
  }
}
"""
    diags = codes(src)
    assert [code for code, _ in diags] == ["undeclared-variable"]


def test_decl_in_if_body_not_visible_after():
    src = """\
Rule a {
  if (isEmpty(getXMLs())) {
    String inner = join("a", "b");
  }
  String outer = upperCase(inner);
}
"""
    diags = codes(src)
    assert [code for code, _ in diags] == ["undeclared-variable"]
    assert "inner" in diags[0][1]


def test_arity_too_few():
    diags = codes('Rule a { String x = substring("abc"); }')
    assert [code for code, _ in diags] == ["builtin-arity"]
    assert "substring" in diags[0][1]


def test_arity_too_many():
    diags = codes('Rule a { if (isEmpty(getXMLs(), "x")) { String q = getName(z); } }')
    assert any(code == "builtin-arity" and "isEmpty" in message for code, message in diags)


def test_variadic_join_accepts_two_or_more():
    assert codes('Rule a { String x = join("a", "b"); }') == []
    assert codes('Rule a { String x = join("a", "b", "c", "d"); }') == []
    diags = codes('Rule a { String x = join("a"); }')
    assert [code for code, _ in diags] == ["builtin-arity"]


def test_diagnostics_carry_positions():
    diags = validate_rule(parse_rule('Rule a {\n  String x = getName(ghost);\n}'))
    assert diags[0].line == 2
    assert diags[0].column == 22


def test_multiple_diagnostics_reported_together():
    src = 'Rule a { String x = getNme(ghost); }'
    got = codes(src)
    assert {code for code, _ in got} == {"unknown-builtin", "undeclared-variable"}


def test_every_shipped_rule_validates_cleanly():
    from mecheck.rulepack import default_rules_dir

    for path in sorted(default_rules_dir().glob("*.rsl")):
        rule = parse_rule(path.read_text())
        assert validate_rule(rule) == [], path.name

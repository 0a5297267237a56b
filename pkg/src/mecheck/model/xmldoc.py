"""XML configuration file parsing.

Built on expat.  Elements keep document order (a per-file ordinal),
1-based line numbers, attribute order, and accumulated character data
(CDATA included).  Namespace prefixes are stripped from element and
attribute names for matching; the raw names are retained for display.
"""

from __future__ import annotations

from pathlib import Path
from xml.parsers import expat

from mecheck.model.items import XmlElement, XmlFile


class MalformedXmlError(Exception):
    def __init__(self, path: str, reason: str, line: int, column: int):
        super().__init__(f"{path}: {reason} at line {line}, column {column}")
        self.path = path
        self.reason = reason
        self.line = line
        self.column = column


def _local_name(raw: str) -> str:
    return raw.rsplit(":", 1)[-1]


def parse_xml(abs_path: Path, rel_path: str) -> XmlFile:
    """Parse one XML file into an XmlFile tree.

    Raises MalformedXmlError for unreadable or ill-formed input.
    """
    try:
        data = abs_path.read_bytes()
    except OSError as exc:
        raise MalformedXmlError(rel_path, f"cannot read file: {exc}", 0, 0) from exc

    parser = expat.ParserCreate()
    parser.ordered_attributes = True
    parser.buffer_text = True

    stack: list[XmlElement] = []
    root_holder: list[XmlElement] = []
    counter = [0]

    def on_start(raw_name, attr_list):
        attrs: dict[str, str] = {}
        raw_names = []
        for i in range(0, len(attr_list), 2):
            raw_attr = attr_list[i]
            raw_names.append(raw_attr)
            local = _local_name(raw_attr)
            if local not in attrs:
                attrs[local] = attr_list[i + 1]
        elem = XmlElement(
            name=_local_name(raw_name),
            raw_name=raw_name,
            attrs=attrs,
            raw_attr_names=tuple(raw_names),
            line=parser.CurrentLineNumber,
            ordinal=counter[0],
        )
        counter[0] += 1
        if stack:
            stack[-1].children.append(elem)
        else:
            root_holder.append(elem)
        stack.append(elem)

    def on_end(raw_name):
        stack.pop()

    def on_chardata(data_text):
        if stack:
            stack[-1].text += data_text

    parser.StartElementHandler = on_start
    parser.EndElementHandler = on_end
    parser.CharacterDataHandler = on_chardata

    try:
        parser.Parse(data, True)
    except expat.ExpatError as exc:
        raise MalformedXmlError(
            rel_path,
            expat.errors.messages[exc.code],
            exc.lineno,
            exc.offset + 1,
        ) from exc

    if not root_holder:
        raise MalformedXmlError(rel_path, "no root element", 1, 1)

    xml_file = XmlFile(path=rel_path, root=root_holder[0])
    for elem in xml_file.iter_elements():
        elem.file = xml_file
    return xml_file

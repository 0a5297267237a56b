"""mecheck: a static checker for metadata usage in Java projects.

Rules written in a small declarative language (RSL) are evaluated against
a model of a project's Java sources and XML configuration files, and every
violated assertion becomes a bug report.
"""

__version__ = "0.1.0"

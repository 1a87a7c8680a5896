"""Lefschetz numbers of endofunctors of finite acyclic categories."""

__version__ = "0.1.0"

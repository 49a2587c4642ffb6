"""Python access to the one-loop toolkit. Reports come back as (exit_code, text, data)."""

import json

from . import _oneloop
from ._oneloop import ParseError, clausen, format_graph, li2

__all__ = ["ParseError", "clausen", "eval", "format_graph", "graded", "li2", "symanzik"]


def _unpack(raw):
    code, text, data = raw
    return code, text, json.loads(data)


def symanzik(graph):
    return _unpack(_oneloop.symanzik(graph))


def eval(graph, kinematics, **kw):  # noqa: A001
    return _unpack(_oneloop.eval(graph, kinematics, **kw))


def graded(n=None, triangle_massless=None):
    return _unpack(_oneloop.graded(n, triangle_massless))

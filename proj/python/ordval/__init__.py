"""Exact kernel for lexicographic sums of rational subgroups and Hahn series
fields. All objects cross the boundary as expression strings in the CLI
grammar; see the README for the grammar and the C++ headers for semantics."""

from ordval._ordval import *  # noqa: F401,F403
from ordval._ordval import __doc__ as _core_doc  # noqa: F401

"""Fundamental groups of torus varieties from polyhedral data.

Thin wrapper over the compiled core: exact lattice normal forms, document
parsing and the command pipeline shared with the ``tfund`` CLI.
"""

import json as _json

from ._core import (
    InputError,
    __version__,
    analyze,
    builtin_document,
    corpus,
    hnf,
    quotient_invariants,
    saturate,
    snf,
)
from ._core import run as _run


def run(command, document, max_cosets=1000000, faces="rays"):
    """Execute a command on a document given as a dict or a JSON string.

    Commands: ``validate``, ``pi1``, ``local-pi1``, ``toric``, ``cstar``,
    ``analyze``.  Returns the machine report as a dict; its ``exit_code``
    follows the CLI convention (0 ok, 2 validation failure, 3 enumeration
    bound exceeded).  Malformed documents raise :class:`InputError`.
    """
    if isinstance(document, dict):
        document = _json.dumps(document)
    return _run(command, document, max_cosets, faces)


__all__ = [
    "InputError",
    "__version__",
    "analyze",
    "builtin_document",
    "corpus",
    "hnf",
    "quotient_invariants",
    "run",
    "saturate",
    "snf",
]

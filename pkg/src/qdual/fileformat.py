"""Line-oriented text formats for rings and modules.

Ring files:

    [ring]
    name = r3
    p = 2
    dim = 2
    unit = 1 0
    mul 0 0 = 1 0
    mul 0 1 = 0 1
    mul 1 1 = 0 0

`mul i j` is required for every 0 <= i <= j < dim; the symmetric pair is
auto-filled.  Module files:

    [module]
    name = k
    ring = r3
    dim = 1
    act 0 = 1
    act 1 = 0

with one `act i` line per ring basis index; rows are separated by `/`.
`#` starts a comment; integers are whitespace separated and reduced
mod p on load.
"""

from __future__ import annotations

import numpy as np

from .errors import ParseError, UnknownRing
from .module import Module
from .ring import validate_ring


def _logical_lines(text):
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield lineno, line


def _parse_ints(value, lineno):
    try:
        return [int(tok) for tok in value.split()]
    except ValueError:
        raise ParseError("expected whitespace-separated integers, got %r"
                         % value, line=lineno)


def _split_assignment(line, lineno):
    if "=" not in line:
        raise ParseError("expected 'key = value'", line=lineno)
    key, value = line.split("=", 1)
    return key.strip(), value.strip()


def parse_ring(text):
    """Parse and fully validate a ring file."""
    header = None
    fields = {}
    muls = {}
    for lineno, line in _logical_lines(text):
        if line.startswith("["):
            if header is not None:
                raise ParseError("duplicate section header", line=lineno)
            if line != "[ring]":
                raise ParseError("expected [ring] section, got %r" % line,
                                 line=lineno)
            header = lineno
            continue
        if header is None:
            raise ParseError("content before [ring] header", line=lineno)
        key, value = _split_assignment(line, lineno)
        if key.startswith("mul"):
            parts = key.split()
            if len(parts) != 3:
                raise ParseError("expected 'mul <i> <j> = ...'", line=lineno)
            try:
                i, j = int(parts[1]), int(parts[2])
            except ValueError:
                raise ParseError("mul indices must be integers", line=lineno)
            muls[(i, j)] = (_parse_ints(value, lineno), lineno)
        elif key in ("name", "p", "dim", "unit"):
            if key in fields:
                raise ParseError("duplicate field %r" % key, line=lineno)
            fields[key] = (value, lineno)
        else:
            raise ParseError("unknown field %r" % key, line=lineno)
    if header is None:
        raise ParseError("missing [ring] section", line=1)
    for required in ("name", "p", "dim", "unit"):
        if required not in fields:
            raise ParseError("missing field %r" % required, line=header)

    name = fields["name"][0]
    try:
        p = int(fields["p"][0])
        dim = int(fields["dim"][0])
    except ValueError:
        raise ParseError("p and dim must be integers", line=fields["p"][1])
    unit = _parse_ints(*fields["unit"])
    if len(unit) != dim:
        raise ParseError("unit must have %d coordinates" % dim,
                         line=fields["unit"][1])
    struct = np.zeros((dim, dim, dim), dtype=np.int64)
    for i in range(dim):
        for j in range(i, dim):
            if (i, j) not in muls:
                raise ParseError("missing 'mul %d %d' line" % (i, j),
                                 line=header)
            coords, lineno = muls[(i, j)]
            if len(coords) != dim:
                raise ParseError("mul %d %d must have %d coordinates"
                                 % (i, j, dim), line=lineno)
            struct[i, j] = coords
            struct[j, i] = coords
    for (i, j), (_, lineno) in muls.items():
        if not (0 <= i < dim and 0 <= j < dim):
            raise ParseError("mul indices out of range", line=lineno)
    return validate_ring(name, p, dim, unit, struct)


def parse_module(text, ring_table):
    """Parse and validate a module file against the given rings."""
    header = None
    fields = {}
    acts = {}
    for lineno, line in _logical_lines(text):
        if line.startswith("["):
            if header is not None:
                raise ParseError("duplicate section header", line=lineno)
            if line != "[module]":
                raise ParseError("expected [module] section, got %r" % line,
                                 line=lineno)
            header = lineno
            continue
        if header is None:
            raise ParseError("content before [module] header", line=lineno)
        key, value = _split_assignment(line, lineno)
        if key.startswith("act"):
            parts = key.split()
            if len(parts) != 2:
                raise ParseError("expected 'act <i> = ...'", line=lineno)
            try:
                i = int(parts[1])
            except ValueError:
                raise ParseError("act index must be an integer", line=lineno)
            rows = [_parse_ints(chunk, lineno)
                    for chunk in value.split("/")] if value else []
            acts[i] = (rows, lineno)
        elif key in ("name", "ring", "dim"):
            if key in fields:
                raise ParseError("duplicate field %r" % key, line=lineno)
            fields[key] = (value, lineno)
        else:
            raise ParseError("unknown field %r" % key, line=lineno)
    if header is None:
        raise ParseError("missing [module] section", line=1)
    for required in ("name", "ring", "dim"):
        if required not in fields:
            raise ParseError("missing field %r" % required, line=header)

    ring_name = fields["ring"][0]
    if ring_name not in ring_table:
        raise UnknownRing("module references unknown ring %r" % ring_name)
    ring = ring_table[ring_name]
    try:
        dim = int(fields["dim"][0])
    except ValueError:
        raise ParseError("dim must be an integer", line=fields["dim"][1])
    action = np.zeros((ring.dim, dim, dim), dtype=np.int64)
    for i in range(ring.dim):
        if i not in acts:
            raise ParseError("missing 'act %d' line" % i, line=header)
        rows, lineno = acts[i]
        if dim == 0:
            if any(row for row in rows):
                raise ParseError("act %d must be empty for dim 0" % i,
                                 line=lineno)
            continue
        if len(rows) != dim or any(len(row) != dim for row in rows):
            raise ParseError("act %d must be a %dx%d matrix" % (i, dim, dim),
                             line=lineno)
        action[i] = rows
    return Module(ring, dim, action, name=fields["name"][0])


def _fmt_row(values):
    return " ".join(str(int(v)) for v in values)


def serialize_ring(ring):
    lines = ["[ring]",
             "name = %s" % ring.name,
             "p = %d" % ring.p,
             "dim = %d" % ring.dim,
             "unit = %s" % _fmt_row(ring.unit)]
    for i in range(ring.dim):
        for j in range(i, ring.dim):
            lines.append("mul %d %d = %s" % (i, j, _fmt_row(ring.struct[i, j])))
    return "\n".join(lines) + "\n"


def serialize_module(module, name=None):
    lines = ["[module]",
             "name = %s" % (name or module.name or "M"),
             "ring = %s" % module.ring.name,
             "dim = %d" % module.dim]
    for i in range(module.ring.dim):
        rows = " / ".join(_fmt_row(module.action[i][r])
                          for r in range(module.dim))
        lines.append("act %d = %s" % (i, rows))
    return "\n".join(lines) + "\n"

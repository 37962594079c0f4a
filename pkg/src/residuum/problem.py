"""Line-oriented problem files and the bundled example fixtures.

Grammar (one directive per line, '#' starts a comment):

    dim N
    gen a1 a2 ... aN
    weight NAME p1 ... pM
    option KEY VALUE

`dim` must precede the first `gen`. Weight lengths are checked against
the number of generators. A file may be referenced by path or, for the
bundled fixtures, by bare name (ex41, ex42, ex54).
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .currents import MonomialSeq

BUNDLED = ("ex41", "ex42", "ex54")


class ParseError(ValueError):
    def __init__(self, message, line=None):
        self.line = line
        prefix = f"line {line}: " if line is not None else ""
        super().__init__(prefix + message)


@dataclass(frozen=True)
class ProblemFile:
    name: str
    dim: int
    generators: tuple
    weights: tuple  # ((name, weight tuple), ...)
    options: tuple  # ((key, raw value), ...)

    @property
    def seq(self):
        return MonomialSeq(dim=self.dim, exps=self.generators)

    def weight_names(self):
        return [name for name, _ in self.weights]

    def get_weight(self, name):
        for wname, w in self.weights:
            if wname == name:
                return w
        raise KeyError(f"unknown weight {name!r}")

    def option(self, key, default=None):
        for okey, value in self.options:
            if okey == key:
                return value
        return default

    def tol(self, default=1e-9):
        raw = self.option("tol")
        return float(raw) if raw is not None else default

    def p_max(self, default=6):
        raw = self.option("p_max")
        return int(raw) if raw is not None else default


def _fixture_text(name):
    return (resources.files("residuum") / "fixtures" / f"{name}.prob").read_text()


def parse(source):
    """ProblemFile from a path or bundled fixture name."""
    if isinstance(source, str) and source in BUNDLED:
        name = source
        text = _fixture_text(source)
    else:
        path = Path(source)
        if not path.exists():
            raise ParseError(f"no such problem file: {source}")
        name = path.stem
        text = path.read_text()
    return parse_text(text, name=name)


def _ints(parts, lineno, what):
    out = []
    for p in parts:
        try:
            out.append(int(p))
        except ValueError:
            raise ParseError(f"{what}: {p!r} is not an integer", lineno) from None
    return out


def parse_text(text, name="<string>"):
    dim = None
    gens = []
    weights = []
    options = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        head, rest = parts[0], parts[1:]
        if head == "dim":
            if dim is not None:
                raise ParseError("dim given twice", lineno)
            if len(rest) != 1:
                raise ParseError("dim takes one integer", lineno)
            (dim,) = _ints(rest, lineno, "dim")
            if dim < 1:
                raise ParseError("dim must be at least 1", lineno)
        elif head == "gen":
            if dim is None:
                raise ParseError("gen before dim", lineno)
            vals = _ints(rest, lineno, "gen")
            if len(vals) != dim:
                raise ParseError(
                    f"gen needs {dim} exponents, got {len(vals)}", lineno
                )
            if any(v < 0 for v in vals):
                raise ParseError("gen exponents must be nonnegative", lineno)
            gens.append(tuple(vals))
        elif head == "weight":
            if not rest:
                raise ParseError("weight needs a name", lineno)
            wname, wvals = rest[0], _ints(rest[1:], lineno, f"weight {rest[0]}")
            if any(v < 1 for v in wvals):
                raise ParseError(
                    f"weight {wname}: entries must be positive", lineno
                )
            weights.append((wname, tuple(wvals), lineno))
        elif head == "option":
            if len(rest) != 2:
                raise ParseError("option takes a key and a value", lineno)
            options.append((rest[0], rest[1]))
        else:
            raise ParseError(f"unknown directive {head!r}", lineno)
    if dim is None:
        raise ParseError("missing dim")
    if not gens:
        raise ParseError("no generators")
    for wname, wvals, lineno in weights:
        if len(wvals) != len(gens):
            raise ParseError(
                f"weight {wname!r} has length {len(wvals)}, expected {len(gens)}",
                lineno,
            )
    problem = ProblemFile(
        name=name,
        dim=dim,
        generators=tuple(gens),
        weights=tuple((w, v) for w, v, _ in weights),
        options=tuple(options),
    )
    try:
        problem.seq
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    return problem


def fixture_tag(problem):
    """Name of the bundled fixture matching the problem data, if any."""
    for name in BUNDLED:
        bundled = parse_text(_fixture_text(name), name=name)
        if (bundled.dim, bundled.generators) == (problem.dim, problem.generators):
            return name
    return None

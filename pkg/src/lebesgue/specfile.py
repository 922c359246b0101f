"""Line-oriented text format describing a finite measure space.

The format is plain UTF-8 with '#' comments.  Every numeric field is an
exact rational string ("p/q" or "p") or an infinity ("inf", "-inf"), so
files are bit-exact test fixtures:

    universe p q r
    generator p q
    measure weights 1 1/2 inf
    function f 0 3/4 inf
    sequence s constant f f

The measure line is one of "counting", "dirac LABEL", or "weights"
followed by one value per point (constant on atoms).  Sequence tags are
"constant" (constant after the listed prefix) or "undefined".
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ParseError, ValidationError
from .measure import Measure, counting, dirac, weighted
from .sigma import FiniteSpace, PointFn, SigmaAlgebra, SubsetMask, generate_sigma
from .xreal import CONSTANT_AFTER_PREFIX, TaggedSeq, UNDEFINED, XReal, ZERO

_TAGS = {"constant": CONSTANT_AFTER_PREFIX, "undefined": UNDEFINED}
_TAG_NAMES = {v: k for k, v in _TAGS.items()}


@dataclass
class SpecFile:
    """A parsed, validated measure-space description."""

    labels: tuple[str, ...]
    generators: tuple[tuple[str, ...], ...]
    measure: tuple
    functions: dict[str, tuple[XReal, ...]] = field(default_factory=dict)
    sequences: dict[str, tuple[str, tuple[str, ...]]] = field(default_factory=dict)

    def space(self) -> FiniteSpace:
        return FiniteSpace(self.labels)

    def sigma(self) -> SigmaAlgebra:
        space = self.space()
        gen = [SubsetMask.from_labels(space, g) for g in self.generators]
        return generate_sigma(space, gen)

    def measure_on(self, sa: SigmaAlgebra) -> Measure:
        kind = self.measure[0]
        if kind == "counting":
            return counting(sa)
        if kind == "dirac":
            return dirac(sa, self.measure[1])
        return weighted(sa, self.measure[1])

    def function(self, name: str) -> PointFn:
        if name not in self.functions:
            raise ValidationError(f"unknown function {name!r}")
        return PointFn(self.space(), self.functions[name])

    def sequence(self, name: str) -> TaggedSeq:
        if name not in self.sequences:
            raise ValidationError(f"unknown sequence {name!r}")
        tag, names = self.sequences[name]
        return TaggedSeq([self.function(f) for f in names], tag)


def _parse_value(token: str, line_no: int) -> XReal:
    try:
        return XReal.parse(token)
    except (ValueError, ZeroDivisionError):
        raise ParseError(line_no, f"bad value {token!r}") from None


def parse_spec(text: str) -> SpecFile:
    """Parse and validate the text of a spec file."""
    labels: tuple[str, ...] | None = None
    generators: list[tuple[str, ...]] = []
    measure: tuple | None = None
    functions: dict[str, tuple[XReal, ...]] = {}
    sequences: dict[str, tuple[str, tuple[str, ...]]] = {}

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        keyword, args = tokens[0], tokens[1:]

        if keyword == "universe":
            if labels is not None:
                raise ValidationError("duplicate universe line")
            if not args:
                raise ParseError(line_no, "universe needs at least one label")
            if len(set(args)) != len(args):
                raise ValidationError("duplicate labels in universe")
            labels = tuple(args)
            continue

        if labels is None:
            raise ParseError(line_no, "universe line must come first")

        if keyword == "generator":
            for l in args:
                if l not in labels:
                    raise ValidationError(f"unknown label {l!r} in generator")
            generators.append(tuple(args))
        elif keyword == "measure":
            if measure is not None:
                raise ValidationError("duplicate measure line")
            if not args:
                raise ParseError(line_no, "measure needs a kind")
            kind = args[0]
            if kind == "counting":
                if len(args) != 1:
                    raise ParseError(line_no, "counting takes no arguments")
                measure = ("counting",)
            elif kind == "dirac":
                if len(args) != 2:
                    raise ParseError(line_no, "dirac takes one label")
                if args[1] not in labels:
                    raise ValidationError(f"unknown label {args[1]!r} in dirac")
                measure = ("dirac", args[1])
            elif kind == "weights":
                values = tuple(_parse_value(t, line_no) for t in args[1:])
                if len(values) != len(labels):
                    raise ValidationError("one weight per point required")
                for v in values:
                    if v < ZERO:
                        raise ValidationError(f"negative weight {v}")
                measure = ("weights", values)
            else:
                raise ParseError(line_no, f"unknown measure kind {kind!r}")
        elif keyword == "function":
            if not args:
                raise ParseError(line_no, "function needs a name")
            name = args[0]
            if name in functions:
                raise ValidationError(f"duplicate function {name!r}")
            values = tuple(_parse_value(t, line_no) for t in args[1:])
            if len(values) != len(labels):
                raise ValidationError(f"function {name!r} needs one value per point")
            functions[name] = values
        elif keyword == "sequence":
            if len(args) < 2:
                raise ParseError(line_no, "sequence needs a name and a tail tag")
            name, tag_name = args[0], args[1]
            if name in sequences:
                raise ValidationError(f"duplicate sequence {name!r}")
            if tag_name not in _TAGS:
                raise ParseError(line_no, f"unknown tail tag {tag_name!r}")
            names = tuple(args[2:])
            if _TAGS[tag_name] == CONSTANT_AFTER_PREFIX and not names:
                raise ValidationError(f"sequence {name!r} needs a non-empty prefix")
            sequences[name] = (_TAGS[tag_name], names)
        else:
            raise ParseError(line_no, f"unknown keyword {keyword!r}")

    if labels is None:
        raise ValidationError("missing universe line")
    if measure is None:
        raise ValidationError("missing measure line")
    for name, (_, names) in sequences.items():
        for f in names:
            if f not in functions:
                raise ValidationError(f"sequence {name!r} uses unknown function {f!r}")
    return SpecFile(labels, tuple(generators), measure, functions, sequences)


def load_spec(path) -> SpecFile:
    """Parse and validate a spec file from disk."""
    with open(path, encoding="utf-8") as handle:
        return parse_spec(handle.read())


def dump_spec(spec: SpecFile) -> str:
    """Render a SpecFile back to its canonical text; parse_spec inverts this."""
    lines = ["universe " + " ".join(spec.labels)]
    for g in spec.generators:
        lines.append(("generator " + " ".join(g)).rstrip())
    kind = spec.measure[0]
    if kind == "counting":
        lines.append("measure counting")
    elif kind == "dirac":
        lines.append(f"measure dirac {spec.measure[1]}")
    else:
        lines.append("measure weights " + " ".join(str(v) for v in spec.measure[1]))
    for name, values in spec.functions.items():
        lines.append(f"function {name} " + " ".join(str(v) for v in values))
    for name, (tag, names) in spec.sequences.items():
        lines.append(
            (f"sequence {name} {_TAG_NAMES[tag]} " + " ".join(names)).rstrip()
        )
    return "\n".join(lines) + "\n"

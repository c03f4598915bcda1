"""Plain-text algebra definition files.

Line-oriented format with keywords ``field``, ``generators``, ``degree``
and ``relation``; ``#`` starts a comment.  Words are dot-separated
generator names (``x.y.x``), coefficients are integers or ``a/b``
fractions, terms are joined with ``+`` / ``-``::

    field rational
    generators x y
    degree 2
    relation 1*x.y - 1*y.x

Definitions compare structurally (field, generator count, degree and the
span of the relations); generator names are presentation only.
"""

import re

from .algebra import NHomogeneousAlgebra
from .errors import DefinitionError
from .fields import field_from_name, field_name
from .linalg import Subspace
from .words import index_word, word_index

_TOKEN = re.compile(r"\S+")
_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*$")
_COEFF = re.compile(r"-?\d+(/\d+)?$")


class AlgebraDefinition:
    """Parsed content of a definition file."""

    def __init__(self, field_spec, generators, degree, relations):
        self.field_spec = field_spec
        self.field = field_from_name(field_spec)
        self.generators = tuple(generators)
        self.degree = degree
        self.relations = relations  # list of [(coeff, word-index-tuple), ...]

    def relation_subspace(self):
        g = len(self.generators)
        amb = g ** self.degree
        field = self.field
        rows = []
        for terms in self.relations:
            row = [field.zero] * amb
            for coeff, word in terms:
                j = word_index(word, g)
                row[j] = field.add(row[j], field.coerce(coeff))
            rows.append(row)
        return Subspace.from_vectors(field, amb, rows)

    def to_algebra(self):
        return NHomogeneousAlgebra(
            len(self.generators), self.degree, self.relation_subspace(),
            gen_names=self.generators, label=",".join(self.generators))

    def __eq__(self, other):
        if not isinstance(other, AlgebraDefinition):
            return NotImplemented
        return (self.field_spec == other.field_spec
                and len(self.generators) == len(other.generators)
                and self.degree == other.degree
                and self.relation_subspace() == other.relation_subspace())

    def __repr__(self):
        return "AlgebraDefinition(%s, generators=%r, degree=%d, %d relations)" % (
            self.field_spec, list(self.generators), self.degree,
            len(self.relations))


def _fail(message, line, col, source):
    raise DefinitionError(message, line=line, col=col, source=source)


def _parse_coefficient(text, lineno, col, source):
    if not _COEFF.match(text):
        _fail("bad coefficient %r" % text, lineno, col, source)
    return text


def _parse_word(text, lineno, col, names, degree, source):
    parts = text.split(".")
    word = []
    at = col
    for part in parts:
        if part not in names:
            _fail("unknown generator %r" % part, lineno, at, source)
        word.append(names[part])
        at += len(part) + 1
    if degree is not None and len(word) != degree:
        _fail("word %r has length %d, expected %d" % (text, len(word), degree),
              lineno, col, source)
    return tuple(word)


def _parse_relation(tokens, lineno, names, degree, field, source):
    terms = []
    sign = 1
    expect_term = True
    for col, tok in tokens:
        if tok in ("+", "-"):
            if expect_term:
                _fail("misplaced %r" % tok, lineno, col, source)
            sign = 1 if tok == "+" else -1
            expect_term = True
            continue
        if not expect_term:
            _fail("missing '+' or '-' before %r" % tok, lineno, col, source)
        if "*" in tok:
            coeff_text, word_text = tok.split("*", 1)
            coeff = _parse_coefficient(coeff_text, lineno, col, source)
            word_col = col + len(coeff_text) + 1
        else:
            coeff, word_text, word_col = "1", tok, col
        word = _parse_word(word_text, lineno, word_col, names, degree, source)
        value = field.coerce(coeff)
        if sign < 0:
            value = field.neg(value)
        terms.append((value, word))
        sign = 1
        expect_term = False
    if expect_term:
        _fail("relation ends with a dangling sign", lineno,
              tokens[-1][0] if tokens else 1, source)
    return terms


def parse_definition(text, source=None):
    """Parse definition text; raises DefinitionError with line/column."""
    field_spec = "rational"
    field = None
    generators = None
    names = None
    degree = None
    pending = []  # relation token lists, validated once names/degree known
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0]
        tokens = [(m.start() + 1, m.group()) for m in _TOKEN.finditer(line)]
        if not tokens:
            continue
        col0, keyword = tokens[0]
        rest = tokens[1:]
        if keyword == "field":
            if len(rest) != 1:
                _fail("expected one field name", lineno, col0, source)
            try:
                field = field_from_name(rest[0][1])
            except ValueError as exc:
                _fail(str(exc), lineno, rest[0][0], source)
            field_spec = rest[0][1]
        elif keyword == "generators":
            if not rest:
                _fail("no generator names", lineno, col0, source)
            generators = []
            for col, name in rest:
                if not _NAME.match(name):
                    _fail("bad generator name %r" % name, lineno, col, source)
                if name in generators:
                    _fail("duplicate generator %r" % name, lineno, col, source)
                generators.append(name)
            names = {n: i for i, n in enumerate(generators)}
        elif keyword == "degree":
            if len(rest) != 1 or not rest[0][1].isdigit() or int(rest[0][1]) < 2:
                _fail("degree must be an integer >= 2", lineno,
                      rest[0][0] if rest else col0, source)
            degree = int(rest[0][1])
        elif keyword == "relation":
            if not rest:
                _fail("empty relation", lineno, col0, source)
            pending.append((lineno, rest))
        else:
            _fail("unknown keyword %r" % keyword, lineno, col0, source)
    if generators is None:
        _fail("missing 'generators' line", 1, 1, source)
    if degree is None:
        _fail("missing 'degree' line", 1, 1, source)
    if field is None:
        field = field_from_name(field_spec)
    relations = [_parse_relation(toks, lineno, names, degree, field, source)
                 for lineno, toks in pending]
    return AlgebraDefinition(field_spec, generators, degree, relations)


def _coeff_str(field, value):
    if field.kind == "rational":
        return str(value)
    return str(value % field.p)


def serialize_definition(definition):
    """Canonical text: relations re-rendered from the reduced span."""
    g = len(definition.generators)
    sub = definition.relation_subspace()
    field = definition.field
    lines = ["field %s" % definition.field_spec,
             "generators %s" % " ".join(definition.generators),
             "degree %d" % definition.degree]
    for row in sub.basis.rows:
        parts = []
        for j, c in enumerate(row):
            if not c:
                continue
            word = index_word(j, g, definition.degree)
            name = ".".join(definition.generators[k] for k in word)
            text = _coeff_str(field, c)
            if parts and field.kind == "rational" and text.startswith("-"):
                parts.append("- %s*%s" % (text[1:], name))
            elif parts:
                parts.append("+ %s*%s" % (text, name))
            else:
                parts.append("%s*%s" % (text, name))
        lines.append("relation %s" % " ".join(parts))
    return "\n".join(lines) + "\n"


def definition_from_algebra(algebra, generators=None, field_spec=None):
    """Express an algebra as a definition (canonical relation rows)."""
    if generators is None:
        generators = [n.replace("'", "_d") for n in algebra.gen_names]
        if (len(set(generators)) != len(generators)
                or not all(_NAME.match(n) for n in generators)):
            generators = ["g%d" % i for i in range(algebra.dim_e)]
    if field_spec is None:
        field_spec = field_name(algebra.field)
    g = algebra.dim_e
    relations = []
    for row in algebra.relations.basis.rows:
        terms = [(c, index_word(j, g, algebra.N))
                 for j, c in enumerate(row) if c]
        relations.append(terms)
    return AlgebraDefinition(field_spec, generators, algebra.N, relations)

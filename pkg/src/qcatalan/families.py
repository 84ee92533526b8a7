"""Parameter families (r_k, s_k, t_k) and their five positivity conditions.

A family is three sequences of q-nonnegative polynomials indexed by k:
r_k and s_k from k = 0, t_k from k = 1 (t_0 and r_{-1} are 0 by convention).
Optionally a family carries witness sequences b_k, c_k used by the fifth
condition and by the corresponding network weighting.

Each sequence is an explicit prefix followed by an optional affine tail
``linear*k + constant``; a sequence without a tail is finite and raises
SequenceExhausted past its prefix.  r/s/t terms are checked lazily on
access: a term with a negative coefficient raises NonNonnegativeParameter.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .errors import (
    MissingWitness,
    NonNonnegativeParameter,
    SchemaError,
    SequenceExhausted,
    UnknownFamily,
)
from .qpoly import ONE, Q, QPoly, ZERO

BUILTIN_NAMES = ("eulerian", "schroder", "narayana")

CONDITION_INDICES = (1, 2, 3, 4, 5)


@dataclass(frozen=True)
class ParamSeq:
    """One parameter sequence: an explicit prefix, then an optional affine tail.

    ``start`` is the index of the first term (0 for r/s and witnesses, 1 for
    t).  Past the prefix, the term at index k is ``linear*k + constant``;
    when both tail parts are absent the sequence ends with its prefix.
    """

    start: int
    prefix: tuple[QPoly, ...] = ()
    linear: QPoly | None = None
    constant: QPoly | None = None

    def __call__(self, k: int) -> QPoly:
        i = k - self.start
        if i < 0:
            raise ValueError(f"index {k} precedes sequence start {self.start}")
        if i < len(self.prefix):
            return self.prefix[i]
        if self.linear is None and self.constant is None:
            raise SequenceExhausted(
                f"sequence has only {len(self.prefix)} explicit terms "
                f"(from index {self.start}) and no tail; index {k} unavailable"
            )
        value = ZERO
        if self.linear is not None:
            value = value + self.linear * k
        if self.constant is not None:
            value = value + self.constant
        return value


@dataclass(frozen=True, eq=False)
class FamilySpec:
    """A named parameter family with optional condition-5 witnesses."""

    name: str
    r_seq: ParamSeq
    s_seq: ParamSeq
    t_seq: ParamSeq
    witness_b: ParamSeq | None = None
    witness_c: ParamSeq | None = None

    def _checked(self, seq: ParamSeq, label: str, k: int) -> QPoly:
        value = seq(k)
        if not value.is_q_nonnegative():
            raise NonNonnegativeParameter(
                f"{label}_{k} = {value} of family {self.name!r} has a negative coefficient"
            )
        return value

    def r(self, k: int) -> QPoly:
        """r_k for k >= 0; r(-1) is 0 by convention."""
        if k == -1:
            return ZERO
        return self._checked(self.r_seq, "r", k)

    def s(self, k: int) -> QPoly:
        """s_k for k >= 0."""
        return self._checked(self.s_seq, "s", k)

    def t(self, k: int) -> QPoly:
        """t_k for k >= 1; t(0) is 0 by convention."""
        if k == 0:
            return ZERO
        return self._checked(self.t_seq, "t", k)

    @property
    def has_witnesses(self) -> bool:
        return self.witness_b is not None and self.witness_c is not None

    def b(self, k: int) -> QPoly:
        """Witness b_k; unlike r/s/t its sign is reported, not an error."""
        if self.witness_b is None:
            raise MissingWitness(f"family {self.name!r} has no witness_b sequence")
        return self.witness_b(k)

    def c(self, k: int) -> QPoly:
        """Witness c_k; unlike r/s/t its sign is reported, not an error."""
        if self.witness_c is None:
            raise MissingWitness(f"family {self.name!r} has no witness_c sequence")
        return self.witness_c(k)


@dataclass(frozen=True)
class ConditionReport:
    """Outcome of checking one positivity condition up to a truncation depth.

    ``first_violation`` is None when the condition holds; otherwise it is a
    pair (k, difference) naming the smallest failing index and the offending
    difference polynomial.
    """

    condition_index: int
    holds: bool
    first_violation: tuple[int, QPoly] | None = None


def check_condition(f: FamilySpec, which: int, up_to: int) -> ConditionReport:
    """Check one of the five sufficient positivity conditions for k <= up_to.

    Conditions 1-4 compare s_k against combinations of neighbouring r/t
    terms; condition 5 verifies the witness factorization r_k = 1,
    s_k = b_k + c_k, t_{k+1} = b_{k+1} c_k with q-nonnegative witnesses.
    """
    if which not in CONDITION_INDICES:
        raise ValueError(f"condition index must be 1..5, got {which!r}")
    if up_to < 0:
        raise ValueError(f"up_to must be >= 0, got {up_to!r}")

    def fail(k: int, diff: QPoly) -> ConditionReport:
        return ConditionReport(which, False, (k, diff))

    if which == 5:
        if not f.has_witnesses:
            raise MissingWitness(
                f"family {f.name!r} carries no witness sequences for condition 5"
            )
        for k in range(up_to + 1):
            b, c = f.b(k), f.c(k)
            if not b.is_q_nonnegative():
                return fail(k, b)
            if not c.is_q_nonnegative():
                return fail(k, c)
            diff = f.r(k) - ONE
            if not diff.is_zero():
                return fail(k, diff)
            diff = f.s(k) - (b + c)
            if not diff.is_zero():
                return fail(k, diff)
            diff = f.t(k + 1) - f.b(k + 1) * c
            if not diff.is_zero():
                return fail(k, diff)
        return ConditionReport(which, True)

    for k in range(up_to + 1):
        if which == 1:
            diff = f.s(k) - (f.r(k) + f.t(k))
        elif which == 2:
            diff = f.s(k) - (f.r(k - 1) + f.t(k + 1))
        elif which == 3:
            diff = f.s(k) - (f.r(k - 1) * f.t(k) + ONE)
        else:  # which == 4
            diff = f.s(k) - (f.r(k) * f.t(k + 1) + (ONE if k >= 1 else ZERO))
        if not diff.is_q_nonnegative():
            return fail(k, diff)
    return ConditionReport(which, True)


# -- builtin families ------------------------------------------------


def _eulerian() -> FamilySpec:
    # r_k = k + 1, s_k = k(q+1) + 1, t_k = k q
    return FamilySpec(
        name="eulerian",
        r_seq=ParamSeq(0, linear=ONE, constant=ONE),
        s_seq=ParamSeq(0, linear=QPoly((1, 1)), constant=ONE),
        t_seq=ParamSeq(1, linear=Q),
    )


def _schroder() -> FamilySpec:
    # r_k = 1, s_0 = q + 1, s_k = 2q + 1, t_k = q^2 + q
    q_plus_1 = QPoly((1, 1))
    return FamilySpec(
        name="schroder",
        r_seq=ParamSeq(0, constant=ONE),
        s_seq=ParamSeq(0, prefix=(q_plus_1,), constant=QPoly((1, 2))),
        t_seq=ParamSeq(1, constant=QPoly((0, 1, 1))),
        witness_b=ParamSeq(0, prefix=(ZERO,), constant=Q),
        witness_c=ParamSeq(0, constant=q_plus_1),
    )


def _narayana() -> FamilySpec:
    # r_k = 1, s_0 = q, s_k = q + 1, t_k = q
    return FamilySpec(
        name="narayana",
        r_seq=ParamSeq(0, constant=ONE),
        s_seq=ParamSeq(0, prefix=(Q,), constant=QPoly((1, 1))),
        t_seq=ParamSeq(1, constant=Q),
        witness_b=ParamSeq(0, prefix=(ZERO,), constant=ONE),
        witness_c=ParamSeq(0, constant=Q),
    )


_BUILTIN_FACTORIES = {
    "eulerian": _eulerian,
    "schroder": _schroder,
    "narayana": _narayana,
}


def builtin(name: str) -> FamilySpec:
    """Return one of the builtin families: eulerian, schroder, narayana."""
    try:
        factory = _BUILTIN_FACTORIES[name]
    except KeyError:
        raise UnknownFamily(
            f"unknown builtin family {name!r}; choose from {', '.join(BUILTIN_NAMES)}"
        ) from None
    return factory()


# -- loading from documents ------------------------------------------

_SEQ_KEYS = {"prefix", "tail"}
_TAIL_KEYS = {"linear", "constant"}
_DOC_KEYS = {"name", "r", "s", "t", "witness_b", "witness_c"}


def _parse_poly(obj: object, where: str) -> QPoly:
    if not isinstance(obj, list):
        raise SchemaError(f"{where}: polynomial must be a list of ints, got {obj!r}")
    for c in obj:
        if not isinstance(c, int) or isinstance(c, bool):
            raise SchemaError(f"{where}: coefficient {c!r} is not an int")
    return QPoly(obj)


def _parse_seq(obj: object, start: int, where: str) -> ParamSeq:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: sequence must be an object, got {obj!r}")
    extra = set(obj) - _SEQ_KEYS
    if extra:
        raise SchemaError(f"{where}: unknown keys {sorted(extra)}")
    prefix_obj = obj.get("prefix", [])
    if not isinstance(prefix_obj, list):
        raise SchemaError(f"{where}.prefix: must be a list of polynomials")
    prefix = tuple(
        _parse_poly(p, f"{where}.prefix[{i}]") for i, p in enumerate(prefix_obj)
    )
    linear = constant = None
    if "tail" in obj:
        tail = obj["tail"]
        if not isinstance(tail, dict):
            raise SchemaError(f"{where}.tail: must be an object, got {tail!r}")
        extra = set(tail) - _TAIL_KEYS
        if extra:
            raise SchemaError(f"{where}.tail: unknown keys {sorted(extra)}")
        if "linear" in tail:
            linear = _parse_poly(tail["linear"], f"{where}.tail.linear")
        if "constant" in tail:
            constant = _parse_poly(tail["constant"], f"{where}.tail.constant")
        if linear is None and constant is None:
            raise SchemaError(f"{where}.tail: needs 'linear' and/or 'constant'")
    return ParamSeq(start=start, prefix=prefix, linear=linear, constant=constant)


def load_family(document: str | dict) -> FamilySpec:
    """Build a FamilySpec from a JSON document (text or already-parsed dict).

    The document shape is ``{name, r, s, t, witness_b?, witness_c?}`` where
    each sequence is ``{prefix?: [poly...], tail?: {linear?: poly,
    constant?: poly}}`` and a polynomial is its ascending coefficient list.
    Declared r/s/t prefix terms must be q-nonnegative.
    """
    if isinstance(document, str):
        try:
            document = json.loads(document)
        except json.JSONDecodeError as exc:
            raise SchemaError(f"family document is not valid JSON: {exc}") from None
    if not isinstance(document, dict):
        raise SchemaError(f"family document must be an object, got {document!r}")
    extra = set(document) - _DOC_KEYS
    if extra:
        raise SchemaError(f"family document has unknown keys {sorted(extra)}")
    name = document.get("name")
    if not isinstance(name, str) or not name:
        raise SchemaError("family document needs a nonempty string 'name'")
    for key in ("r", "s", "t"):
        if key not in document:
            raise SchemaError(f"family document is missing the {key!r} sequence")
    r_seq = _parse_seq(document["r"], 0, "r")
    s_seq = _parse_seq(document["s"], 0, "s")
    t_seq = _parse_seq(document["t"], 1, "t")
    witness_b = witness_c = None
    if "witness_b" in document:
        witness_b = _parse_seq(document["witness_b"], 0, "witness_b")
    if "witness_c" in document:
        witness_c = _parse_seq(document["witness_c"], 0, "witness_c")
    spec = FamilySpec(
        name=name,
        r_seq=r_seq,
        s_seq=s_seq,
        t_seq=t_seq,
        witness_b=witness_b,
        witness_c=witness_c,
    )
    # Validate the declared prefixes eagerly; tails stay lazy.
    for label, seq in (("r", r_seq), ("s", s_seq), ("t", t_seq)):
        for i, value in enumerate(seq.prefix):
            if not value.is_q_nonnegative():
                raise NonNonnegativeParameter(
                    f"{label}_{seq.start + i} = {value} of family {name!r} "
                    "has a negative coefficient"
                )
    return spec

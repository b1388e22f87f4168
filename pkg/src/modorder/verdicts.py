"""Witness-carrying verdicts for order-relation queries.

Every relation decision returns an :class:`OrderVerdict`.  When the relation
holds, the verdict carries a witness that can be replayed against the
defining equations of the relation; when it does not hold, the witness is
absent.  ``applicable=False`` marks queries whose preconditions (typically a
missing involution) rule the question out entirely, and ``hypothesis_ok``
records whether the theorem hypotheses behind the characterization were
satisfied by the operands.
"""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class DualWitness:
    """A functional m -> R, given by its value table over module indices."""

    table: tuple[int, ...]


@dataclass(frozen=True)
class IdemPair:
    """An idempotent endomorphism index f and an idempotent ring element a.

    The projection flags mark clauses that additionally required
    self-adjointness under the relevant involution.
    """

    f: int
    a: int
    f_projection: bool = False
    a_projection: bool = False


@dataclass(frozen=True)
class MapPair:
    """An arbitrary endomorphism index f and ring element a."""

    f: int
    a: int


@dataclass(frozen=True)
class DirectSumWitness:
    """The two summand sets of an internal direct-sum decomposition."""

    first: tuple[int, ...]
    second: tuple[int, ...]


@dataclass(frozen=True)
class InnerInverse:
    """An inner generalized inverse: x with a*x*a = a."""

    value: int


@dataclass(frozen=True)
class AnnihPair:
    """Idempotents p, q certifying the annihilator form of the ring minus order."""

    p: int
    q: int


Witness = DualWitness | IdemPair | MapPair | DirectSumWitness | InnerInverse | AnnihPair


@dataclass(frozen=True)
class OrderVerdict:
    relation: str
    operands: tuple[int, int]
    holds: bool
    witness: Witness | None = None
    hypothesis_ok: bool = True
    applicable: bool = True

    def __post_init__(self):
        if self.applicable and self.holds != (self.witness is not None):
            raise ValueError(f"verdict for {self.relation} breaks holds <-> witness")

    def to_json(self) -> dict:
        out = {
            "relation": self.relation,
            "operands": list(self.operands),
            "holds": self.holds,
            "applicable": self.applicable,
            "hypothesis_ok": self.hypothesis_ok,
            "witness": witness_to_json(self.witness),
        }
        return out


def witness_to_json(w: Witness | None):
    if w is None:
        return None
    if isinstance(w, DualWitness):
        return {"kind": "functional", "table": list(w.table)}
    if isinstance(w, IdemPair):
        return {"kind": "idem-pair", "f": w.f, "a": w.a,
                "f_projection": w.f_projection, "a_projection": w.a_projection}
    if isinstance(w, MapPair):
        return {"kind": "map-pair", "f": w.f, "a": w.a}
    if isinstance(w, DirectSumWitness):
        return {"kind": "direct-sum", "first": list(w.first), "second": list(w.second)}
    if isinstance(w, InnerInverse):
        return {"kind": "inner-inverse", "value": w.value}
    if isinstance(w, AnnihPair):
        return {"kind": "annihilator-idem-pair", "p": w.p, "q": w.q}
    raise TypeError(f"unknown witness {w!r}")

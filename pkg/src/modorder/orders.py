"""Decision procedures for the order relations, each returning a replayable witness.

Every characterization is implemented independently, straight from its own
defining clauses; the proved equivalences between them are verified by the
law suite, never assumed here.  Witness searches run in ascending index
order and return the first hit, so identical queries always produce
identical verdicts.

Theorem-hypothesis violations (a non-regular operand where the
characterization assumes regularity) do not abort: the raw existential is
still decided and the verdict carries ``hypothesis_ok=False``.
"""

from __future__ import annotations

from .homs import ModuleContext, m_times
from .modules import Submodule, cyclic_submodule, is_internal_direct_sum
from .verdicts import (DirectSumWitness, DualWitness, IdemPair, MapPair,
                       OrderVerdict)


# -- regularity -----------------------------------------------------------------


def _regular_witness_table(ctx: ModuleContext):
    """First dual functional witnessing m = m.phi(m), per element (None if none)."""
    if "regular" not in ctx.cache:
        M = ctx.module
        table = []
        for m in range(M.size):
            hit = None
            for phi in ctx.dual:
                if M.action[m][phi.table[m]] == m:
                    hit = phi
                    break
            table.append(hit)
        ctx.cache["regular"] = tuple(table)
    return ctx.cache["regular"]


def is_regular_element(ctx: ModuleContext, m: int) -> OrderVerdict:
    """Zelmanowitz regularity: some phi in M* with m = m.phi(m)."""
    phi = _regular_witness_table(ctx)[m]
    if phi is None:
        return OrderVerdict("regular", (m, m), False)
    return OrderVerdict("regular", (m, m), True, DualWitness(phi.table))


def regular_set(ctx: ModuleContext) -> frozenset[int]:
    table = _regular_witness_table(ctx)
    return frozenset(m for m in range(ctx.module.size) if table[m] is not None)


def is_regular_module(ctx: ModuleContext):
    """(True, None) or (False, first non-regular element)."""
    table = _regular_witness_table(ctx)
    for m, phi in enumerate(table):
        if phi is None:
            return False, m
    return True, None


def regular_decomposition(ctx: ModuleContext, m: int, phi) -> tuple[int, Submodule]:
    """e = phi(m) and N = {n : m.phi(n) = 0}; decomposes M as mR (+) N.

    phi must witness regularity of m (rejected otherwise).  The returned e
    is idempotent and the decomposition is re-verified before returning.
    """
    M = ctx.module
    table = phi.table if hasattr(phi, "table") else tuple(phi)
    if M.action[m][table[m]] != m:
        raise ValueError(f"functional does not witness regularity of {m}")
    e = table[m]
    assert M.ring.mul[e][e] == e
    n_set = Submodule(M, frozenset(n for n in range(M.size)
                                   if M.action[m][table[n]] == M.zero))
    whole = Submodule(M, frozenset(range(M.size)))
    if not is_internal_direct_sum(cyclic_submodule(M, m), n_set, whole):
        raise AssertionError(f"decomposition failed for m={m}")
    return e, n_set


# -- minus order, four characterizations ------------------------------------------


def minus_le_dual(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Definitional form: some phi with m1 = m1.phi(m1), m1 phi = m2 phi, phi(m1) = phi(m2)."""
    M = ctx.module
    for phi in ctx.dual:
        t = phi.table
        if M.action[m1][t[m1]] != m1:
            continue
        if t[m1] != t[m2]:
            continue
        if all(M.action[m1][t[x]] == M.action[m2][t[x]] for x in range(M.size)):
            return OrderVerdict("minus-dual", (m1, m2), True, DualWitness(t))
    return OrderVerdict("minus-dual", (m1, m2), False)


def minus_le_idem(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Annihilator-equality form: idempotents f in S, a in R with
    l_S(m1) = l_S(f), r_R(m1) = r_R(a), f m1 = f m2 and m1 a = m2 a."""
    S, M = ctx.endos, ctx.module
    hyp = _regular_witness_table(ctx)[m1] is not None
    l1, r1 = ctx.l_S(m1), ctx.r_R(m1)
    for f in sorted(S.idempotents()):
        if ctx.l_S_of_endo(f) != l1:
            continue
        if S.apply(f, m1) != S.apply(f, m2):
            continue
        for a in sorted(M.ring.idempotents()):
            if ctx.r_R_of_elem(a) != r1:
                continue
            if M.action[m1][a] == M.action[m2][a]:
                return OrderVerdict("minus-idem", (m1, m2), True,
                                    IdemPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("minus-idem", (m1, m2), False, hypothesis_ok=hyp)


def minus_le_relaxed(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Inclusion form: l_S(f) <= l_S(m1) and r_R(a) <= r_R(m1) suffice."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    l1, r1 = ctx.l_S(m1), ctx.r_R(m1)
    for f in sorted(S.idempotents()):
        if not ctx.l_S_of_endo(f) <= l1:
            continue
        if S.apply(f, m1) != S.apply(f, m2):
            continue
        for a in sorted(M.ring.idempotents()):
            if ctx.r_R_of_elem(a) <= r1 and M.action[m1][a] == M.action[m2][a]:
                return OrderVerdict("minus-relaxed", (m1, m2), True,
                                    IdemPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("minus-relaxed", (m1, m2), False, hypothesis_ok=hyp)


def minus_le_image(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Image form: m1 R <= f M and S m1 <= M a replace the annihilator clauses."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    m1R = ctx.cyclic[m1]
    Sm1 = frozenset(h.table[m1] for h in S.maps)
    for f in sorted(S.idempotents()):
        if not m1R <= frozenset(S.maps[f].table):
            continue
        if S.apply(f, m1) != S.apply(f, m2):
            continue
        for a in sorted(M.ring.idempotents()):
            if Sm1 <= m_times(M, a) and M.action[m1][a] == M.action[m2][a]:
                return OrderVerdict("minus-image", (m1, m2), True,
                                    IdemPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("minus-image", (m1, m2), False, hypothesis_ok=hyp)


# -- Jones / Mitsch style and the direct-sum order --------------------------------


def jones_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """m1 = f m2 = m2 a for idempotent f in S, a in R."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    for f in sorted(S.idempotents()):
        if S.apply(f, m2) != m1:
            continue
        for a in sorted(M.ring.idempotents()):
            if M.action[m2][a] == m1:
                return OrderVerdict("jones", (m1, m2), True,
                                    IdemPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("jones", (m1, m2), False, hypothesis_ok=hyp)


def mitsch_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """m1 = m2 a = f m2 and m1 = f m1, with f and a unrestricted."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    for f in range(S.size):
        if S.apply(f, m2) != m1 or S.apply(f, m1) != m1:
            continue
        for a in range(M.ring.size):
            if M.action[m2][a] == m1:
                return OrderVerdict("mitsch", (m1, m2), True,
                                    MapPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("mitsch", (m1, m2), False, hypothesis_ok=hyp)


def mitsch_le_sym(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Strengthened Mitsch clauses, adding m1 = m1 a."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    for f in range(S.size):
        if S.apply(f, m2) != m1 or S.apply(f, m1) != m1:
            continue
        for a in range(M.ring.size):
            if M.action[m2][a] == m1 == M.action[m1][a]:
                return OrderVerdict("mitsch-sym", (m1, m2), True,
                                    MapPair(f, a), hypothesis_ok=hyp)
    return OrderVerdict("mitsch-sym", (m1, m2), False, hypothesis_ok=hyp)


def corollary_gb_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """m1 = m2 b = g m2 and m1 = m1 b, with g and b unrestricted."""
    S, M = ctx.endos, ctx.module
    hyp = is_regular_module(ctx)[0]
    for g in range(S.size):
        if S.apply(g, m2) != m1:
            continue
        for b in range(M.ring.size):
            if M.action[m2][b] == m1 == M.action[m1][b]:
                return OrderVerdict("gb", (m1, m2), True,
                                    MapPair(g, b), hypothesis_ok=hyp)
    return OrderVerdict("gb", (m1, m2), False, hypothesis_ok=hyp)


def direct_sum_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """m2 R = m1 R (+) (m2 - m1) R as an internal direct sum."""
    M = ctx.module
    hyp = (_regular_witness_table(ctx)[m1] is not None
           and _regular_witness_table(ctx)[m2] is not None)
    diff = M.sub(m2, m1)
    a = cyclic_submodule(M, m1)
    b = cyclic_submodule(M, diff)
    target = cyclic_submodule(M, m2)
    if is_internal_direct_sum(a, b, target):
        return OrderVerdict("dsum", (m1, m2), True,
                            DirectSumWitness(a.sorted(), b.sorted()),
                            hypothesis_ok=hyp)
    return OrderVerdict("dsum", (m1, m2), False, hypothesis_ok=hyp)


# -- star family -------------------------------------------------------------------


def _star_like(ctx, m1, m2, tag, f_proj, a_proj):
    S, M, R = ctx.endos, ctx.module, ctx.module.ring
    if f_proj and S.involution is None:
        return OrderVerdict(tag, (m1, m2), False, applicable=False)
    if a_proj and R.involution is None:
        return OrderVerdict(tag, (m1, m2), False, applicable=False)
    hyp = _regular_witness_table(ctx)[m1] is not None
    f_pool = sorted(S.projections() if f_proj else S.idempotents())
    a_pool = sorted(R.projections() if a_proj else R.idempotents())
    l1, r1 = ctx.l_S(m1), ctx.r_R(m1)
    for f in f_pool:
        if ctx.l_S_of_endo(f) != l1 or S.apply(f, m1) != S.apply(f, m2):
            continue
        for a in a_pool:
            if ctx.r_R_of_elem(a) == r1 and M.action[m1][a] == M.action[m2][a]:
                return OrderVerdict(tag, (m1, m2), True,
                                    IdemPair(f, a, f_projection=f_proj,
                                             a_projection=a_proj),
                                    hypothesis_ok=hyp)
    return OrderVerdict(tag, (m1, m2), False, hypothesis_ok=hyp)


def right_star_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Minus clauses with a upgraded to a projection of R (R must be a *-ring)."""
    return _star_like(ctx, m1, m2, "rstar", f_proj=False, a_proj=True)


def left_star_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Minus clauses with f upgraded to a projection of S (S must be a *-ring)."""
    return _star_like(ctx, m1, m2, "lstar", f_proj=True, a_proj=False)


def star_le(ctx: ModuleContext, m1: int, m2: int) -> OrderVerdict:
    """Both idempotents upgraded to projections."""
    return _star_like(ctx, m1, m2, "star", f_proj=True, a_proj=True)


def subset_cyclic(ctx: ModuleContext, m1: int, m2: int) -> bool:
    """m1 R <= m2 R (a consequence of the minus order, strictly weaker)."""
    return ctx.cyclic[m1] <= ctx.cyclic[m2]


RELATIONS = {
    "minus-dual": minus_le_dual,
    "minus-idem": minus_le_idem,
    "minus-relaxed": minus_le_relaxed,
    "minus-image": minus_le_image,
    "jones": jones_le,
    "mitsch": mitsch_le,
    "mitsch-sym": mitsch_le_sym,
    "gb": corollary_gb_le,
    "dsum": direct_sum_le,
    "rstar": right_star_le,
    "lstar": left_star_le,
    "star": star_le,
}

# the nine characterizations proved equivalent on regular modules
EQUIVALENT_FAMILY = ("minus-dual", "minus-idem", "minus-relaxed", "minus-image",
                     "jones", "mitsch", "mitsch-sym", "gb", "dsum")


def evaluate(ctx: ModuleContext, tag: str, m1: int, m2: int) -> OrderVerdict:
    M = ctx.module
    for m in (m1, m2):
        if not (0 <= m < M.size):
            raise ValueError(f"element {m} out of range for {M.name}")
    try:
        rel = RELATIONS[tag]
    except KeyError:
        raise ValueError(f"unknown relation {tag!r}") from None
    return rel(ctx, m1, m2)


def revalidate(ctx: ModuleContext, verdict: OrderVerdict) -> bool:
    """Replay a verdict's witness against its relation's defining equations."""
    if not verdict.holds:
        return True
    M, S, R = ctx.module, ctx.endos, ctx.module.ring
    m1, m2 = verdict.operands
    w = verdict.witness
    tag = verdict.relation

    if tag == "regular":
        return M.action[m1][w.table[m1]] == m1
    if tag == "minus-dual":
        t = w.table
        return (M.action[m1][t[m1]] == m1 and t[m1] == t[m2]
                and all(M.action[m1][t[x]] == M.action[m2][t[x]]
                        for x in range(M.size)))
    if tag in ("minus-idem", "rstar", "lstar", "star"):
        f, a = w.f, w.a
        if S.mul[f][f] != f or R.mul[a][a] != a:
            return False
        if w.f_projection and S.star(f) != f:
            return False
        if w.a_projection and R.star(a) != a:
            return False
        return (ctx.l_S_of_endo(f) == ctx.l_S(m1)
                and ctx.r_R_of_elem(a) == ctx.r_R(m1)
                and S.apply(f, m1) == S.apply(f, m2)
                and M.action[m1][a] == M.action[m2][a])
    if tag == "minus-relaxed":
        f, a = w.f, w.a
        return (S.mul[f][f] == f and R.mul[a][a] == a
                and ctx.l_S_of_endo(f) <= ctx.l_S(m1)
                and ctx.r_R_of_elem(a) <= ctx.r_R(m1)
                and S.apply(f, m1) == S.apply(f, m2)
                and M.action[m1][a] == M.action[m2][a])
    if tag == "minus-image":
        f, a = w.f, w.a
        return (S.mul[f][f] == f and R.mul[a][a] == a
                and ctx.cyclic[m1] <= frozenset(S.maps[f].table)
                and frozenset(h.table[m1] for h in S.maps) <= m_times(M, a)
                and S.apply(f, m1) == S.apply(f, m2)
                and M.action[m1][a] == M.action[m2][a])
    if tag == "jones":
        f, a = w.f, w.a
        return (S.mul[f][f] == f and R.mul[a][a] == a
                and S.apply(f, m2) == m1 == M.action[m2][a])
    if tag == "mitsch":
        return (S.apply(w.f, m2) == m1 == M.action[m2][w.a]
                and S.apply(w.f, m1) == m1)
    if tag == "mitsch-sym":
        return (S.apply(w.f, m2) == m1 == M.action[m2][w.a]
                and S.apply(w.f, m1) == m1 == M.action[m1][w.a])
    if tag == "gb":
        return (S.apply(w.f, m2) == m1 == M.action[m2][w.a]
                and M.action[m1][w.a] == m1)
    if tag == "dsum":
        a = Submodule(M, frozenset(w.first))
        b = Submodule(M, frozenset(w.second))
        if a.members != ctx.cyclic[m1] or b.members != frozenset(
                M.action[M.sub(m2, m1)][r] for r in range(M.ring.size)):
            return False
        return is_internal_direct_sum(a, b, cyclic_submodule(M, m2))
    raise ValueError(f"unknown relation {tag!r}")

"""Trace-of-S^2 theory: the Larson-Radford-style formula and its corollaries.

For a dual pair (ell, lambda) the trace of the antipode square satisfies
Tr(S^2) = <eps_s(lambda), eps_s(ell)> with eps_s(lambda) computed in the
dual algebra.  Non-vanishing of Tr(S^2) restricted to blocks cut out by
primitive idempotents of Z(H) cap H_s is sufficient (not necessary) for
semisimplicity, so every criterion here is *verified as an implication*
against the Maschke decision; it never replaces it.

Idempotent splitting works over the exact field only: minimal polynomials
are factored by root search (rational root candidates over Q; root-of-unity
multiples over cyclotomic fields), and a component whose minimal polynomials
have no such root raises NonSplit rather than guessing.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction

from .errors import Inconsistent, Mismatch, NonSplit, PreconditionUnmet
from .integrals import canonical_dual_pair, is_semisimple, semisimple_by_trace_form
from .linalg import Matrix, Subspace, try_solve
from .wha import Element

__all__ = [
    "TraceReport",
    "coinciding_bases_theorem_check",
    "connectedness",
    "primitive_idempotents",
    "restricted_trace",
    "semisimplicity_report",
    "trace_s2",
]


def trace_s2(h, pair):
    """Tr(S^2) directly and through <eps_s(lambda), eps_s(ell)>; must agree."""
    direct = (h.S @ h.S).trace()
    eps_s_lam = h.dual.eps_s_mat.matvec(pair.lam.coeffs)
    eps_s_ell = h.eps_s(pair.ell.coeffs)
    formula = sum(
        (a * b for a, b in zip(eps_s_lam, eps_s_ell) if a and b), h.field.zero()
    )
    if direct != formula:
        raise Mismatch(f"Tr(S^2): direct {direct} != formula {formula}")
    return {"direct": direct, "formula": formula}


# ---------------------------------------------------------------------------
# polynomial helpers over an arbitrary exact field


def _poly_eval(f, x, field):
    acc = field.zero()
    for c in reversed(f):
        acc = acc * x + c
    return acc


def _poly_mul(f, g, field):
    if not f or not g:
        return []
    out = [field.zero()] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    return out


def _poly_divmod(f, g, field):
    f = list(f)
    dg = len(g) - 1
    lead = g[-1]
    out = [field.zero()] * max(len(f) - dg, 0)
    for k in range(len(out) - 1, -1, -1):
        q = field.div(f[k + dg], lead)
        out[k] = q
        if q:
            for i, c in enumerate(g):
                f[k + i] -= q * c
    while f and not f[-1]:
        f.pop()
    return out, f


def _poly_ext_gcd(f, g, field):
    """(u, w) with u f + w g = gcd(f, g), gcd monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [field.one()], []
    t0, t1 = [], [field.one()]
    while r1:
        q, r = _poly_divmod(r0, r1, field)
        r0, r1 = r1, r
        s0, s1 = s1, _poly_sub(s0, _poly_mul(q, s1, field), field)
        t0, t1 = t1, _poly_sub(t0, _poly_mul(q, t1, field), field)
    lead = r0[-1]
    inv = field.inv(lead)
    return (
        [c * inv for c in s0],
        [c * inv for c in t0],
        [c * inv for c in r0],
    )


def _poly_sub(f, g, field):
    out = [field.zero()] * max(len(f), len(g))
    for i, c in enumerate(f):
        out[i] += c
    for i, c in enumerate(g):
        out[i] -= c
    while out and not out[-1]:
        out.pop()
    return out


def _rational_root_candidates(f):
    """Divisor-based candidate roots of a monic polynomial over Q."""
    denom = 1
    for c in f:
        denom = denom * c.denominator // _gcd(denom, c.denominator)
    ints = [int(c * denom) for c in f]
    lead = ints[-1]
    const = ints[0]
    cands = {Fraction(0)}
    if const == 0:
        return sorted(cands)
    for p in _divisors(abs(const)):
        for q in _divisors(abs(lead)):
            cands.add(Fraction(p, q))
            cands.add(Fraction(-p, q))
    return sorted(cands)


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def _divisors(n):
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def _root_candidates(f, field):
    if field.kind == "rational":
        return _rational_root_candidates(f)
    # cyclotomic: rational candidates (when the coefficients are rational)
    # scaled by every power of the root of unity
    rational_part = []
    for c in f:
        if any(x for x in c.c[1:]):
            rational_part = None
            break
        rational_part.append(Fraction(c.c[0]))
    base = _rational_root_candidates(rational_part) if rational_part else [
        Fraction(0), Fraction(1), Fraction(-1), Fraction(2), Fraction(-2),
        Fraction(1, 2), Fraction(-1, 2), Fraction(3), Fraction(-3),
    ]
    cands = []
    seen = set()
    for r in base:
        for k in range(field.order):
            v = field.from_fraction(r) * field.zeta(k)
            if v not in seen:
                seen.add(v)
                cands.append(v)
    return cands


def _roots_in_field(f, field):
    return [r for r in _root_candidates(f, field) if not _poly_eval(f, r, field)]


# ---------------------------------------------------------------------------
# primitive idempotents of a commutative subalgebra


def _min_poly_in(h, space, unit, x):
    """Monic minimal polynomial of x inside the unital component (space, unit)."""
    field = h.field
    rows = [space.coords(unit)]
    power = list(unit)
    while True:
        power = h.mul_vec(power, x)
        coords = space.coords(power)
        assert coords is not None, "component not closed under multiplication"
        m = Matrix(field, rows).transpose()
        sol = try_solve(m, coords)
        if sol is not None:
            coeffs = [-c for c in sol[0]] + [field.one()]
            return coeffs
        rows.append(coords)


def primitive_idempotents(h, space, unit=None):
    """Complete orthogonal primitive idempotents of a commutative subalgebra.

    Splits iteratively: each basis element's minimal polynomial is searched
    for roots in the field; a root r with a proper cofactor splits the
    component through the Bezout idempotent of (t - r)^m and the cofactor.
    Components where no minimal polynomial has a field root (and splitting is
    still needed) raise NonSplit.
    """
    field = h.field
    unit = tuple(unit if unit is not None else h.unit)
    assert space.contains(unit), "unit must lie in the subalgebra"
    pending = [(space, unit)]
    finished = []
    while pending:
        comp, p = pending.pop()
        if comp.dim == 1:
            finished.append(Element(h, p))
            continue
        split = None
        rootless = False
        # candidate splitting elements: the component's own echelon basis can
        # hide nice spectra, so images p*a of the original subalgebra basis
        # are tried first (character values stay visible there)
        candidates = []
        seen = set()
        for a in list(space.rows) + list(comp.rows):
            x = tuple(h.mul_vec(p, a))
            if any(x) and x not in seen:
                seen.add(x)
                candidates.append(x)
        for bvec in candidates:
            f = _min_poly_in(h, comp, p, bvec)
            if len(f) <= 2:
                continue
            roots = _roots_in_field(f, field)
            if not roots:
                rootless = True
                continue
            for r in roots:
                linear = [-r, field.one()]
                power = [field.one()]
                rem = list(f)
                mult = 0
                while True:
                    q, rr = _poly_divmod(rem, linear, field)
                    if rr:
                        break
                    rem = q
                    mult += 1
                    power = _poly_mul(power, linear, field)
                cofactor = rem
                if len(cofactor) <= 1:
                    continue  # pure power of one root: no split from this x
                split = (bvec, power, cofactor)
                break
            if split:
                break
        if split is None:
            if rootless:
                raise NonSplit("minimal polynomial without a root in the field")
            # every minimal polynomial is a pure power: local component
            finished.append(Element(h, p))
            continue
        xvec, power, cofactor = split
        u, w, g = _poly_ext_gcd(power, cofactor, field)
        assert len(g) == 1, "factors not coprime"
        # idempotent for the cofactor part: u(x) * (x - r)^m evaluated at x
        e_big = _poly_mul(u, power, field)
        e_vec = _eval_poly_at(h, e_big, xvec, p)
        if tuple(h.mul_vec(e_vec, e_vec)) != tuple(e_vec):
            raise Inconsistent("split element is not idempotent")
        e_comp = [a - b for a, b in zip(p, e_vec)]
        for q in (e_vec, e_comp):
            sub_rows = [h.mul_vec(q, b) for b in comp.rows]
            sub = Subspace.from_vectors(field, h.dim, sub_rows)
            pending.append((sub, tuple(q)))
    finished.sort(key=lambda e: tuple(field.format(c) for c in e.coeffs))
    total = [field.zero()] * h.dim
    for e in finished:
        for q in finished:
            if e is not q and any(h.mul_vec(e.coeffs, q.coeffs)):
                raise Inconsistent("idempotents not orthogonal")
        total = [a + b for a, b in zip(total, e.coeffs)]
    if tuple(total) != unit:
        raise Inconsistent("idempotents do not sum to the unit")
    return finished


def _eval_poly_at(h, f, x, unit):
    acc = [h.field.zero()] * h.dim
    power = list(unit)
    for c in f:
        if c:
            acc = [a + c * b for a, b in zip(acc, power)]
        power = h.mul_vec(power, x)
    return acc


# ---------------------------------------------------------------------------
# connectedness and the report


def connectedness(h):
    """Z(H) cap H_s = k1 decides connected; biconnected adds the dual."""
    own = h.centralizer_in(h.source_base).dim == 1
    dual = h.dual.centralizer_in(h.dual.source_base).dim == 1
    return {"connected": own, "biconnected": own and dual}


def restricted_trace(h, operator, space):
    """Trace of an operator restricted to an invariant subspace."""
    total = h.field.zero()
    for i, row in enumerate(space.rows):
        image = operator.matvec(row)
        coords = space.coords(image)
        if coords is None:
            raise Inconsistent("subspace not invariant under the operator")
        total += coords[i]
    return total


@dataclass
class TraceReport:
    tr_s2_direct: object
    tr_s2_formula: object
    per_block: list  # (label, Tr(S^2|pH), Tr(S^2|pHp)) or None when NonSplit
    per_block_available: bool
    lemma_blocks: list  # same triple over primitive central idempotents of H_min
    lemma_blocks_available: bool
    connected: bool
    biconnected: bool
    semisimple: bool
    cosemisimple: bool
    implications: list = dataclass_field(default_factory=list)

    @property
    def ok(self):
        return all(rec["holds"] for rec in self.implications)

    def as_dict(self, field):
        fmt = field.format
        return {
            "tr_s2": {"direct": fmt(self.tr_s2_direct), "formula": fmt(self.tr_s2_formula)},
            "per_block": [
                {"idempotent": lab, "tr_pH": fmt(a), "tr_pHp": fmt(b)}
                for (lab, a, b) in (self.per_block or [])
            ]
            if self.per_block_available
            else "unavailable (NonSplit)",
            "lemma_blocks": [
                {"idempotent": lab, "tr_pH": fmt(a), "tr_pHp": fmt(b)}
                for (lab, a, b) in (self.lemma_blocks or [])
            ]
            if self.lemma_blocks_available
            else "unavailable (NonSplit)",
            "connected": self.connected,
            "biconnected": self.biconnected,
            "semisimple": self.semisimple,
            "cosemisimple": self.cosemisimple,
            "implications": self.implications,
            "ok": self.ok,
        }


def _block_traces(h, idempotents, s2):
    out = []
    for e in idempotents:
        p = e.coeffs
        lp = h.left_mult_matrix(p)
        rp = h.right_mult_matrix(p)
        ph = Subspace.from_vectors(h.field, h.dim, [lp.col(i) for i in range(h.dim)])
        php = Subspace.from_vectors(
            h.field, h.dim, [rp.matvec(lp.col(i)) for i in range(h.dim)]
        )
        label = repr(e)
        out.append((label, restricted_trace(h, s2, ph), restricted_trace(h, s2, php)))
    return out


def semisimplicity_report(h, pair=None):
    """Evaluate every sufficient criterion as an implication on this algebra.

    Semisimplicity itself is decided by Maschke and cross-checked against the
    regular trace form; the Tr(S^2)-based sufficient conditions are recorded
    as (hypothesis, conclusion, holds) triples.
    """
    from .grouplikes import is_regular

    pair = pair or canonical_dual_pair(h)
    traces = trace_s2(h, pair)
    semis = is_semisimple(h)
    oracle = semisimple_by_trace_form(h)
    if semis != oracle:
        raise Inconsistent("Maschke and trace-form oracle disagree")
    cosemis = is_semisimple(h.dual)
    conn = connectedness(h)
    # the sufficient criteria below are all stated under S^2 = id on H_min,
    # so that regularity joins their hypotheses
    regular = is_regular(h)
    s2 = h.S @ h.S
    z_cap_hs = h.centralizer_in(h.source_base)
    per_block = None
    per_block_available = True
    try:
        idem = primitive_idempotents(h, z_cap_hs, unit=h.unit)
        per_block = _block_traces(h, idem, s2)
    except NonSplit:
        per_block_available = False
    hmin = h.minimal_subalgebra
    z_hmin = h.centralizer_in(hmin, against=hmin)
    lemma_blocks = None
    lemma_blocks_available = True
    try:
        idem_min = primitive_idempotents(h, z_hmin, unit=h.unit)
        lemma_blocks = _block_traces(h, idem_min, s2)
    except NonSplit:
        lemma_blocks_available = False

    implications = []

    def record(name, hypothesis, conclusion):
        implications.append(
            {
                "name": name,
                "hypothesis": bool(hypothesis),
                "conclusion": bool(conclusion),
                "holds": (not hypothesis) or bool(conclusion),
            }
        )

    if per_block_available:
        record(
            "blocks_pH_nonzero_implies_semisimple",
            regular and all(t_ph != 0 for (_l, t_ph, _t) in per_block),
            semis,
        )
    # dual-block criterion: Tr(S^2|H* pi) != 0 over primitive idempotents of
    # H_s* cap H_t* implies H semisimple
    dual = h.dual
    dual_caps = dual.source_base.intersect(dual.target_base)
    try:
        dual_idem = primitive_idempotents(dual, dual_caps, unit=dual.unit)
        s2_dual = dual.S @ dual.S
        traces_dual = []
        for e in dual_idem:
            r_pi = dual.right_mult_matrix(e.coeffs)
            h_star_pi = Subspace.from_vectors(
                dual.field, dual.dim, [r_pi.col(i) for i in range(dual.dim)]
            )
            traces_dual.append(restricted_trace(dual, s2_dual, h_star_pi))
        record(
            "dual_blocks_nonzero_implies_semisimple",
            regular and all(t != 0 for t in traces_dual),
            semis,
        )
    except NonSplit:
        pass
    record(
        "connected_trace_nonzero_implies_semisimple",
        regular and conn["connected"] and traces["direct"] != 0,
        semis,
    )
    record(
        "biconnected_trace_nonzero_implies_both_semisimple",
        regular and conn["biconnected"] and traces["direct"] != 0,
        semis and cosemis,
    )
    if lemma_blocks_available:
        record(
            "semisimple_implies_pHp_traces_nonzero",
            regular and semis,
            all(t_php != 0 for (_l, _t, t_php) in lemma_blocks),
        )
    return TraceReport(
        tr_s2_direct=traces["direct"],
        tr_s2_formula=traces["formula"],
        per_block=per_block,
        per_block_available=per_block_available,
        lemma_blocks=lemma_blocks,
        lemma_blocks_available=lemma_blocks_available,
        connected=conn["connected"],
        biconnected=conn["biconnected"],
        semisimple=semis,
        cosemisimple=cosemis,
        implications=implications,
    )


def coinciding_bases_theorem_check(h, pair=None):
    """H_t = H_s and H semisimple force H* semisimple; proof step verified.

    Also checks the intermediate claim: eps_t(lambda), taken in the dual
    algebra, is invertible and lies in Z(H*) cap H_s*.
    """
    if h.target_base != h.source_base:
        raise PreconditionUnmet("bases do not coincide")
    if not is_semisimple(h):
        raise PreconditionUnmet("algebra is not semisimple")
    dual = h.dual
    dual_ok = is_semisimple(dual)
    pair = pair or canonical_dual_pair(h)
    v = dual.eps_t_mat.matvec(pair.lam.coeffs)
    central = dual.centralizer_in(dual.source_base)
    in_place = central.contains(v)
    invertible = dual.left_mult_matrix(v).is_invertible()
    return {
        "dual_semisimple": dual_ok,
        "eps_t_lambda_in_center_cap_base": in_place,
        "eps_t_lambda_invertible": invertible,
        "ok": dual_ok and in_place and invertible,
    }

"""Group-like elements, distinguished pairs, and the fourth-power formula.

A group-like is an invertible g with Delta(g) = (g (x) g) Delta(1) =
Delta(1) (g (x) g); the one-sided conditions cut out the half-sets G1 and
G2.  Trivial group-likes are those of the form S(y) y^{-1} with y in H_s;
they form a normal subgroup, and only the quotient by it is finite, so the
API is predicate- and witness-based rather than enumerative.

From a dual pair of integrals (ell, lambda) the distinguished group-likes
are alpha = lambda <- ell in H* and a = ell <- lambda in H; they control the
fourth power of the antipode through Radford's formula
S^4(h) = a^{-1} (alpha -> h <- alpha^{-1}) a.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import Inconsistent, NotHalfGrouplike, RegularityViolated
from .linalg import Matrix, Subspace, solve_sparse
from .search import find_invertible_in_subspace, height_vectors, max_height
from .wha import Element, Functional

__all__ = [
    "DistinguishedPair",
    "GammaModule",
    "antipode_order_report",
    "coset_equal",
    "distinguished_pair",
    "gamma_module",
    "gamma_module_iso",
    "grouplike_automorphism",
    "is_dual_grouplike",
    "is_grouplike",
    "is_half_grouplike",
    "is_regular",
    "is_trivial_automorphism",
    "is_trivial_grouplike",
    "is_wha_morphism",
    "lambda_ell_relations",
    "make_trivial_grouplike",
    "module_from_integral",
    "radford_check",
    "self_intertwiners",
    "twisted_counitals",
    "twisted_integral_spaces",
]


def _basis(h, i):
    return [h.field.one() if t == i else h.field.zero() for t in range(h.dim)]


def _pair_of(h, a, b):
    out = {}
    for i, x in enumerate(a):
        if not x:
            continue
        for j, y in enumerate(b):
            if y:
                out[(i, j)] = x * y
    return out


def is_half_grouplike(h, g, side):
    """Membership in G1 (Delta(g) = (g(x)g)Delta(1)) or G2 (other side)."""
    g = g.coeffs if isinstance(g, Element) else g
    dg = h.comul_vec(g)
    gg = _pair_of(h, g, g)
    if side == 1:
        return dg == h.mul_pair_dicts(gg, h.delta_one)
    return dg == h.mul_pair_dicts(h.delta_one, gg)


def is_grouplike(h, g):
    """Invertible and group-like on both sides, all tensor-exact."""
    g = g.coeffs if isinstance(g, Element) else g
    if not h.left_mult_matrix(g).is_invertible():
        return False
    return is_half_grouplike(h, g, 1) and is_half_grouplike(h, g, 2)


def is_dual_grouplike(h, gamma):
    """Group-like functional: convolution-invertible plus both factorizations.

    <gamma, hg> = <gamma, h 1_(1)> <gamma, S(1_(2)) g>
    <gamma, hg> = <gamma, h S(1_(1))> <gamma, 1_(2) g>
    checked over all basis pairs (h, g).
    """
    gamma = gamma.coeffs if isinstance(gamma, Functional) else gamma
    fn = Functional(h, gamma)
    if not fn.is_invertible():
        return False
    n = h.dim
    g2 = [[fn(h.mul_vec(_basis(h, a), _basis(h, b))) for b in range(n)] for a in range(n)]
    first = [[fn(h.mul_vec(h.apply_S(_basis(h, a)), _basis(h, b))) for b in range(n)] for a in range(n)]
    second = [[fn(h.mul_vec(_basis(h, a), h.apply_S(_basis(h, b)))) for b in range(n)] for a in range(n)]
    zero = h.field.zero()
    d1 = h.delta_one
    for a in range(n):
        for b in range(n):
            rhs1 = sum((c * g2[a][j] * first[k][b] for (j, k), c in d1.items()), zero)
            rhs2 = sum((c * second[a][j] * g2[k][b] for (j, k), c in d1.items()), zero)
            if not (g2[a][b] == rhs1 == rhs2):
                return False
    return True


def make_trivial_grouplike(h, y):
    """S(y) y^{-1} for invertible y in H_s (test helper for the trivial subgroup)."""
    y = y if isinstance(y, Element) else Element(h, y)
    assert h.source_base.contains(y.coeffs), "y must lie in H_s"
    return Element(h, h.apply_S(y.coeffs)) * y.inv()


def is_trivial_grouplike(h, g):
    """Decide g = S(y) y^{-1} with invertible y in H_s fixed by S^2.

    The constraints y in H_s, S^2(y) = y, g y = S(y) are all linear; the
    invertibility search over the solution space is the deterministic height
    enumeration followed by the exact grid decision.  Returns (flag, y).
    """
    g = g.coeffs if isinstance(g, Element) else g
    s2 = h.S @ h.S
    eye = Matrix.identity(h.field, h.dim)
    lg = h.left_mult_matrix(g)
    hs = h.source_base
    if hs.dim == 0:
        return False, None
    constraints = [s2 - eye, lg - h.S]
    rows = []
    rhs = []
    for mat in constraints:
        cols = [mat.matvec(row) for row in hs.rows]
        for r in range(h.dim):
            row = {c: cols[c][r] for c in range(hs.dim) if cols[c][r]}
            rows.append(row)
            rhs.append(h.field.zero())
    got = solve_sparse(rows, rhs, hs.dim, h.field)
    assert got is not None
    vecs = []
    for kv in got[1]:
        v = [h.field.zero()] * h.dim
        for c, coeff in enumerate(kv):
            if coeff:
                v = [x + coeff * y for x, y in zip(v, hs.rows[c])]
        vecs.append(v)
    space = Subspace.from_vectors(h.field, h.dim, vecs)
    if space.dim == 0:
        return False, None
    hit = find_invertible_in_subspace(h, space)
    if hit is None:
        return False, None
    return True, Element(h, hit[0])


def coset_equal(h, g1, g2):
    """Same coset modulo trivial group-likes: g1 g2^{-1} is trivial."""
    g1 = g1 if isinstance(g1, Element) else Element(h, g1)
    g2 = g2 if isinstance(g2, Element) else Element(h, g2)
    return is_trivial_grouplike(h, g1 * g2.inv())[0]


def is_regular(h):
    """S^2 = id on the minimal weak Hopf subalgebra H_min."""
    s2 = h.S @ h.S
    return all(tuple(s2.matvec(row)) == row for row in h.minimal_subalgebra.rows)


@dataclass
class DistinguishedPair:
    alpha: Functional  # distinguished group-like of H*
    a: Element  # distinguished group-like of H
    source: object  # the DualPair it came from


def distinguished_pair(h, pair):
    """alpha = lambda <- ell and a = ell <- lambda, with all postconditions.

    Requires S^2 = id on H_min; verified postconditions: alpha and a are
    group-like, S(ell) = alpha -> ell, S(lambda) = a -> lambda.
    """
    if not is_regular(h):
        raise RegularityViolated("S^2 != id on H_min; regularize first")
    ell, lam = pair.ell, pair.lam
    alpha = Functional(h, h.dual_ract(lam, ell.coeffs))  # <alpha, g> = <lambda, ell g>
    a = Element(h, h.ract(ell.coeffs, lam))  # <lambda, ell_(1)> ell_(2)
    if not is_dual_grouplike(h, alpha):
        raise Inconsistent("alpha is not group-like in H*")
    if not is_grouplike(h, a):
        raise Inconsistent("a is not group-like in H")
    if tuple(h.lact(alpha, ell.coeffs)) != tuple(h.apply_S(ell.coeffs)):
        raise Inconsistent("S(ell) != alpha -> ell")
    if tuple(h.dual_lact(a.coeffs, lam)) != tuple(h.S.transpose().matvec(lam.coeffs)):
        raise Inconsistent("S(lambda) != a -> lambda")
    return DistinguishedPair(alpha=alpha, a=a, source=pair)


def radford_check(h, dp):
    """Exact residual of S^4(h) = a^{-1} (alpha -> h <- alpha^{-1}) a per basis element."""
    alpha, a = dp.alpha, dp.a
    alpha_inv = alpha.inv()
    a_inv = a.inv()
    s4 = h.S.power(4)
    failures = []
    for i in range(h.dim):
        mid = h.lact(alpha, h.ract(_basis(h, i), alpha_inv))
        conj = h.mul_vec(a_inv.coeffs, h.mul_vec(mid, a.coeffs))
        if tuple(conj) != s4.col(i):
            failures.append(i)
    return failures


def lambda_ell_relations(h, dp):
    """The four exact translation identities between ell- and lambda-arrows.

    ell_L(phi) = phi -> ell   lambda_L(x) = x -> lambda
    ell_R(phi) = ell <- phi   lambda_R(x) = lambda <- x
    checked on every basis element:
      ell_L . lambda_R = S
      ell_L . lambda_L = S^{-1} (alpha -> .)
      ell_R . lambda_R = S^{-1} (a^{-1} .)
      ell_R . lambda_L = S ((. <- alpha) a^{-1})
    """
    ell, lam = dp.source.ell, dp.source.lam
    alpha, a = dp.alpha, dp.a
    a_inv = a.inv()
    failures = []
    for i in range(h.dim):
        e = _basis(h, i)
        lam_r = h.dual_ract(lam, e)  # lambda <- e_i
        lam_l = h.dual_lact(e, lam)  # e_i -> lambda
        got1 = h.lact(lam_r, ell.coeffs)
        if tuple(got1) != h.S.col(i):
            failures.append(("ellL_lamR", i))
        got2 = h.lact(lam_l, ell.coeffs)
        want2 = h.apply_S_inv(h.lact(alpha, e))
        if tuple(got2) != tuple(want2):
            failures.append(("ellL_lamL", i))
        got3 = h.ract(ell.coeffs, lam_r)
        want3 = h.apply_S_inv(h.mul_vec(a_inv.coeffs, e))
        if tuple(got3) != tuple(want3):
            failures.append(("ellR_lamR", i))
        got4 = h.ract(ell.coeffs, lam_l)
        want4 = h.apply_S(h.mul_vec(h.ract(e, alpha), a_inv.coeffs))
        if tuple(got4) != tuple(want4):
            failures.append(("ellR_lamL", i))
    return failures


# ---------------------------------------------------------------------------
# twisted counital maps and gamma-modules


def twisted_counitals(h, gamma):
    """The projections eps_s^gamma and eps_t^gamma for a group-like functional.

    eps_s^gamma(x) = <gamma, x 1_(1)> S(1_(2))   (needs gamma in G1(H*))
    eps_t^gamma(x) = S(1_(1)) <gamma, 1_(2) x>   (needs gamma in G2(H*))
    Each is returned only if its half-condition holds; both are verified
    idempotent with the expected image.
    """
    gamma = gamma if isinstance(gamma, Functional) else Functional(h, gamma)
    gd = gamma.as_dual_element()
    out = {}
    zero = h.field.zero()
    n = h.dim
    g2 = [[gamma(h.mul_vec(_basis(h, a), _basis(h, b))) for b in range(n)] for a in range(n)]
    if is_half_grouplike(h.dual, gd, 1):
        cols = []
        for i in range(n):
            col = [zero] * n
            for (a, b), w in h.delta_one.items():
                c = w * g2[i][a]
                if c:
                    sb = h.S.col(b)
                    col = [x + c * y for x, y in zip(col, sb)]
            cols.append(col)
        eps_s_g = Matrix.from_columns(h.field, cols)
        if eps_s_g @ eps_s_g != eps_s_g:
            raise Inconsistent("eps_s^gamma is not idempotent")
        out["eps_s_gamma"] = eps_s_g
    if is_half_grouplike(h.dual, gd, 2):
        cols = []
        for i in range(n):
            col = [zero] * n
            for (a, b), w in h.delta_one.items():
                c = w * g2[b][i]
                if c:
                    sa = h.S.col(a)
                    col = [x + c * y for x, y in zip(col, sa)]
            cols.append(col)
        eps_t_g = Matrix.from_columns(h.field, cols)
        if eps_t_g @ eps_t_g != eps_t_g:
            raise Inconsistent("eps_t^gamma is not idempotent")
        out["eps_t_gamma"] = eps_t_g
    if not out:
        raise NotHalfGrouplike("gamma lies in neither G1(H*) nor G2(H*)")
    return out


@dataclass
class GammaModule:
    """Right H-module structure on H_s attached to gamma in G1(H*)."""

    gamma: Functional
    base: Subspace  # H_s with its echelon basis
    action: tuple  # one dim_s x dim_s matrix per basis element of H

    def act(self, y_coords, h_index):
        return self.action[h_index].matvec(y_coords)


def gamma_module(h, gamma):
    """The right module y . x = eps_s^gamma(y x); axioms verified exactly."""
    gamma = gamma if isinstance(gamma, Functional) else Functional(h, gamma)
    maps = twisted_counitals(h, gamma)
    if "eps_s_gamma" not in maps:
        raise NotHalfGrouplike("gamma is not in G1(H*)")
    eps_sg = maps["eps_s_gamma"]
    hs = h.source_base
    mats = []
    for j in range(h.dim):
        cols = []
        for y in hs.rows:
            image = eps_sg.matvec(h.mul_vec(y, _basis(h, j)))
            coords = hs.coords(image)
            if coords is None:
                raise Inconsistent("action leaves H_s")
            cols.append(coords)
        mats.append(Matrix.from_columns(h.field, cols))
    module = GammaModule(gamma=gamma, base=hs, action=tuple(mats))
    # y . 1 = y
    one_action = None
    for j, c in enumerate(h.unit):
        if c:
            term = mats[j].scale(c)
            one_action = term if one_action is None else one_action + term
    if one_action != Matrix.identity(h.field, hs.dim):
        raise Inconsistent("unit does not act as identity")
    # (y . g) . x = y . (g x) on all basis pairs
    for a in range(h.dim):
        for b in range(h.dim):
            lhs = mats[b] @ mats[a]
            rhs = None
            for k, c in h.mult.get((a, b), {}).items():
                term = mats[k].scale(c)
                rhs = term if rhs is None else rhs + term
            if rhs is None:
                rhs = Matrix.zero(h.field, hs.dim)
            if lhs != rhs:
                raise Inconsistent(f"action not multiplicative at ({a}, {b})")
    # restriction to H_s is right multiplication
    for x in hs.rows:
        for y in hs.rows:
            y_coords = hs.coords(y)
            got = [h.field.zero()] * hs.dim
            for j, xj in enumerate(x):
                if xj:
                    term = mats[j].matvec(y_coords)
                    got = [a + xj * b for a, b in zip(got, term)]
            want = hs.coords(h.mul_vec(y, x))
            if tuple(got) != tuple(want):
                raise Inconsistent("restriction to H_s is not right multiplication")
    return module


def module_from_integral(h, ell):
    """The module W_ell solved from ell y x = ell (y . x), plus gamma_ell.

    Non-degeneracy makes ell separating for right H_s-multiplication, so the
    action is the unique solution of a small linear system; gamma_ell is
    x |-> eps(1 . x).
    """
    ell = ell if isinstance(ell, Element) else Element(h, ell)
    hs = h.source_base
    cols = [h.mul_vec(ell.coeffs, y) for y in hs.rows]
    m_ell = Matrix.from_columns(h.field, cols)
    mats = []
    for j in range(h.dim):
        acols = []
        for y in hs.rows:
            rhs = h.mul_vec(h.mul_vec(ell.coeffs, y), _basis(h, j))
            from .linalg import try_solve

            sol = try_solve(m_ell, rhs)
            if sol is None or sol[1].dim:
                raise Inconsistent("ell is not separating on H_s")
            acols.append(sol[0])
        mats.append(Matrix.from_columns(h.field, acols))
    one_coords = hs.coords(h.unit)
    assert one_coords is not None, "unit must lie in H_s"
    gamma_coeffs = []
    for j in range(h.dim):
        image = mats[j].matvec(one_coords)
        vec = [h.field.zero()] * h.dim
        for c, row in zip(image, hs.rows):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        gamma_coeffs.append(h.counit_of(vec))
    gamma = Functional(h, gamma_coeffs)
    return gamma, GammaModule(gamma=gamma, base=hs, action=tuple(mats))


def _intertwiner_space(h, gamma1, gamma2):
    """{v in H_s : v eps_s^g1(x) = eps_s^g2(v x) for all x} as a Subspace."""
    maps1 = twisted_counitals(h, gamma1)
    maps2 = twisted_counitals(h, gamma2)
    if "eps_s_gamma" not in maps1 or "eps_s_gamma" not in maps2:
        raise NotHalfGrouplike("both functionals must lie in G1(H*)")
    eps1, eps2 = maps1["eps_s_gamma"], maps2["eps_s_gamma"]
    hs = h.source_base
    rows = []
    rhs = []
    for j in range(h.dim):
        w = eps1.col(j)
        r_w = h.right_mult_matrix(w)
        lhs_cols = [r_w.matvec(v) for v in hs.rows]
        e_j_mat = h.right_mult_matrix(_basis(h, j))
        # eps_s^g2(v e_j): v on the left of e_j
        rhs_cols = [eps2.matvec(e_j_mat.matvec(v)) for v in hs.rows]
        for r in range(h.dim):
            row = {}
            for c in range(hs.dim):
                val = lhs_cols[c][r] - rhs_cols[c][r]
                if val:
                    row[c] = val
            rows.append(row)
            rhs.append(h.field.zero())
    got = solve_sparse(rows, rhs, hs.dim, h.field)
    assert got is not None
    vecs = []
    for kv in got[1]:
        v = [h.field.zero()] * h.dim
        for c, coeff in enumerate(kv):
            if coeff:
                v = [x + coeff * y for x, y in zip(v, hs.rows[c])]
        vecs.append(v)
    return Subspace.from_vectors(h.field, h.dim, vecs)


def gamma_module_iso(h, gamma1, gamma2):
    """Isomorphism test for the modules of two G1(H*) functionals.

    Solves the linear intertwiner system, then searches the solution space
    for an invertible v (height enumeration + grid decision).  Returns
    (flag, v or None).
    """
    space = _intertwiner_space(h, gamma1, gamma2)
    if space.dim == 0:
        return False, None
    hit = find_invertible_in_subspace(h, space)
    if hit is None:
        return False, None
    return True, Element(h, hit[0])


def self_intertwiners(h, gamma):
    """Self-intertwiner space of the gamma-module, realized inside H_s.

    Verified to equal Z(H) cap H_s as a subspace and to have the dimension
    of H_t* cap H_s* computed in the dual.
    """
    space = _intertwiner_space(h, gamma, gamma)
    z_cap_hs = h.centralizer_in(h.source_base)
    if space != z_cap_hs:
        raise Inconsistent("self-intertwiners differ from Z(H) cap H_s")
    dual = h.dual
    dual_dim = dual.target_base.intersect(dual.source_base).dim
    if space.dim != dual_dim:
        raise Inconsistent("dim mismatch with H_t* cap H_s*")
    return space


# ---------------------------------------------------------------------------
# L_gamma / R_gamma spaces


def twisted_integral_spaces(h, gamma=None, g=None):
    """L and R spaces of a group-like functional (in H) or element (in H*).

    L_gamma = {x : g x = eps_t^gamma(g) x for all g},
    R_gamma = {x : x g = x eps_s^gamma(g) for all g};
    for g in G(H) the same spaces are computed inside the dual algebra.
    """
    if g is not None:
        g = g if isinstance(g, Element) else Element(h, g)
        dual = h.dual
        return twisted_integral_spaces(dual, gamma=Functional(dual, g.coeffs))
    gamma = gamma if isinstance(gamma, Functional) else Functional(h, gamma)
    maps = twisted_counitals(h, gamma)
    if "eps_s_gamma" not in maps or "eps_t_gamma" not in maps:
        raise NotHalfGrouplike("gamma must be group-like on both sides")
    eps_sg, eps_tg = maps["eps_s_gamma"], maps["eps_t_gamma"]
    n = h.dim
    rows = []
    rhs = []
    for i in range(n):
        diff = h.left_mult_matrix(_basis(h, i)) - h.left_mult_matrix(eps_tg.col(i))
        for r in range(n):
            rows.append({c: v for c, v in enumerate(diff.rows[r]) if v})
            rhs.append(h.field.zero())
    got = solve_sparse(rows, rhs, n, h.field)
    left = Subspace.from_vectors(h.field, n, got[1])
    rows = []
    rhs = []
    for i in range(n):
        diff = h.right_mult_matrix(_basis(h, i)) - h.right_mult_matrix(eps_sg.col(i))
        for r in range(n):
            rows.append({c: v for c, v in enumerate(diff.rows[r]) if v})
            rhs.append(h.field.zero())
    got = solve_sparse(rows, rhs, n, h.field)
    right = Subspace.from_vectors(h.field, n, got[1])
    return {"L": left, "R": right}


# ---------------------------------------------------------------------------
# automorphisms


def is_wha_morphism(h, phi):
    """Full morphism check: algebra, unit, coalgebra, counit, antipode."""
    n = h.dim
    if tuple(phi.matvec(h.unit)) != h.unit:
        return False
    for i in range(n):
        for j in range(n):
            lhs = h.mul_vec(phi.col(i), phi.col(j))
            rhs = [h.field.zero()] * n
            for k, c in h.mult.get((i, j), {}).items():
                rhs = [x + c * y for x, y in zip(rhs, phi.col(k))]
            if tuple(lhs) != tuple(rhs):
                return False
    for i in range(n):
        lhs = h.comul_vec(phi.col(i))
        rhs = {}
        zero = h.field.zero()
        for (j, k), c in h.comult[i].items():
            pj, pk = phi.col(j), phi.col(k)
            for a, ca in enumerate(pj):
                if not ca:
                    continue
                for b, cb in enumerate(pk):
                    if cb:
                        key = (a, b)
                        v = rhs.get(key, zero) + c * ca * cb
                        if v:
                            rhs[key] = v
                        elif key in rhs:
                            del rhs[key]
        if lhs != rhs:
            return False
    if tuple(phi.transpose().matvec(h.counit)) != h.counit:
        return False
    return phi @ h.S == h.S @ phi


def grouplike_automorphism(h, g=None, gamma=None):
    """Conjugation by a group-like element or functional, morphism-verified."""
    if g is not None:
        g = g if isinstance(g, Element) else Element(h, g)
        phi = h.left_mult_matrix(g.coeffs) @ h.right_mult_matrix(g.inv().coeffs)
    else:
        gamma = gamma if isinstance(gamma, Functional) else Functional(h, gamma)
        phi = h.lact_matrix(gamma) @ h.ract_matrix(gamma.inv())
    if not is_wha_morphism(h, phi):
        raise Inconsistent("conjugation is not a weak Hopf algebra automorphism")
    return phi


def is_trivial_automorphism(h, phi):
    """Decide whether phi is conjugation by a trivial group-like element.

    Any witness u satisfies phi(x) u = u x, lies in H_min (trivial
    group-likes live in H_s S(H_s)), and has eps_t(u) = eps_s(u) = 1, so the
    candidates form an affine subspace; a zero-dimensional slice is decided
    outright and a positive-dimensional one is searched by heights, with an
    honest "undecided" when the search is exhausted.
    Returns (verdict, witness) with verdict one of "yes" | "no" | "undecided".
    """
    n = h.dim
    rows = []
    rhs = []
    for i in range(n):
        diff = h.left_mult_matrix(phi.col(i)) - h.right_mult_matrix(_basis(h, i))
        for r in range(n):
            rows.append({c: v for c, v in enumerate(diff.rows[r]) if v})
            rhs.append(h.field.zero())
    got = solve_sparse(rows, rhs, n, h.field)
    conjugators = Subspace.from_vectors(h.field, n, got[1]).intersect(h.minimal_subalgebra)
    if conjugators.dim == 0:
        return "no", None
    # affine slice eps_t(u) = 1 = eps_s(u) within the conjugator space
    cols = []
    for row in conjugators.rows:
        cols.append(list(h.eps_t(row)) + list(h.eps_s(row)))
    m = Matrix.from_columns(h.field, cols)
    from .linalg import try_solve

    sol = try_solve(m, list(h.unit) + list(h.unit))
    if sol is None:
        return "no", None
    particular, kern = sol

    def assemble(coeffs):
        vec = [h.field.zero()] * n
        for c, row in zip(coeffs, conjugators.rows):
            if c:
                vec = [x + c * y for x, y in zip(vec, row)]
        return vec

    from .errors import Undecidable

    saw_undecidable = []

    def qualifies(u):
        if not h.left_mult_matrix(u).is_invertible():
            return None
        if not is_grouplike(h, u):
            return None
        try:
            ok, y = is_trivial_grouplike(h, u)
        except Undecidable:
            saw_undecidable.append(True)
            return None
        return (Element(h, u), y) if ok else None

    # conjugation by 1 is the identity, so the identity map is settled at once
    if phi == Matrix.identity(h.field, n):
        got = qualifies(list(h.unit))
        if got:
            return "yes", got
    if kern.dim == 0:
        got = qualifies(assemble(particular))
        if got:
            return "yes", got
        return ("undecided", None) if saw_undecidable else ("no", None)
    candidates = [tuple(particular)]
    cap = 4000  # bounded affine sweep; beyond it the verdict is an honest undecided
    for shift in height_vectors(kern.dim, max_height=max_height()):
        coeffs = list(particular)
        for s, krow in zip(shift, kern.rows):
            if s:
                coeffs = [x + s * y for x, y in zip(coeffs, krow)]
        candidates.append(tuple(coeffs))
        if len(candidates) >= cap:
            break
    for coeffs in candidates:
        got = qualifies(assemble(coeffs))
        if got:
            return "yes", got
    return "undecided", None


def antipode_order_report(h, bound=64):
    """Smallest k <= bound with S^{4k} a trivial automorphism."""
    s4 = h.S.power(4)
    power = s4
    undecided = []
    for k in range(1, bound + 1):
        verdict, witness = is_trivial_automorphism(h, power)
        if verdict == "yes":
            return {"order": k, "witness": witness, "undecided": undecided}
        if verdict == "undecided":
            undecided.append(k)
        power = power @ s4
    return {"order": None, "bound": bound, "undecided": undecided}

"""Deformations and twists.

Three layers: the base deformation H_q (an invertible q in H_t with
S^2(q) = q and S(1_(1)) q 1_(2) = 1 deforms the coalgebra structure without
touching the algebra), regularization (deforming by the inverse of the
classifying element g so that S^2 becomes the identity on H_min), and
general twists: pairs (Theta, Theta_bar) with Theta Theta_bar = Delta(1)
deforming Delta to Theta_bar Delta(.) Theta and the antipode to
v^{-1} S(.) v with v = S(Theta^(1)) Theta^(2).

The dynamical construction consumes a character-indexed family J over a
Hopf algebra U and a finite abelian group A of group-likes of U, verifies
the shifted cocycle equation for every character by brute tensor
contraction, and assembles the twist on the host M_{|A|} (x) U.
"""

from __future__ import annotations

from dataclasses import dataclass

from .constructors import matrix_wha, tensor_product
from .errors import (
    DynamicalEquationViolated,
    FieldTooSmall,
    Inconsistent,
    InvalidPresentation,
    Mismatch,
    NotATwist,
    NotInvertible,
    PreconditionUnmet,
    VNotInvertible,
)
from .grouplikes import is_grouplike, is_regular
from .integrals import is_semisimple
from .linalg import Matrix
from .wha import Element, WeakHopfAlgebra, minimal_data, validate_full

__all__ = [
    "AbelianGrouplikes",
    "DynamicalTwist",
    "DynamicalTwistData",
    "Twist",
    "deform_q",
    "dynamical_cosemisimplicity_check",
    "dynamical_theta",
    "regularize",
    "twist",
    "twist_conjugator",
]


def _basis(h, i):
    return [h.field.one() if t == i else h.field.zero() for t in range(h.dim)]


# ---------------------------------------------------------------------------
# base deformation H_q


def deform_q(h, q, name=None):
    """Deform the coalgebra structure by an invertible q in H_t.

    Delta'(x) = Delta(x)(1 (x) q), eps'(x) = eps(x q^{-1}),
    S'(x) = q^{-1} S(x) q; the underlying algebra is unchanged.  All three
    preconditions are checked and reported individually.
    """
    q = q if isinstance(q, Element) else Element(h, q)
    if not h.target_base.contains(q.coeffs):
        raise PreconditionUnmet("q does not lie in H_t")
    try:
        q_inv = q.inv()
    except NotInvertible as exc:
        raise PreconditionUnmet(f"q is not invertible: {exc}") from exc
    s2q = h.apply_S(h.apply_S(q.coeffs))
    if tuple(s2q) != q.coeffs:
        raise PreconditionUnmet("S^2(q) != q")
    acc = [h.field.zero()] * h.dim
    for (a, b), c in h.delta_one.items():
        term = h.mul_vec(h.mul_vec(h.apply_S(_basis(h, a)), q.coeffs), _basis(h, b))
        acc = [x + c * y for x, y in zip(acc, term)]
    if tuple(acc) != h.unit:
        raise PreconditionUnmet(f"S(1_(1)) q 1_(2) != 1 (residual {acc})")
    one_q = {}
    for i, ci in enumerate(h.unit):
        if not ci:
            continue
        for j, cj in enumerate(q.coeffs):
            if cj:
                one_q[(i, j)] = ci * cj
    comult = [h.mul_pair_dicts(h.comult[i], one_q) for i in range(h.dim)]
    counit = [h.counit_of(h.mul_vec(_basis(h, i), q_inv.coeffs)) for i in range(h.dim)]
    s_mat = h.left_mult_matrix(q_inv.coeffs) @ h.right_mult_matrix(q.coeffs) @ h.S
    out = WeakHopfAlgebra(
        h.field, h.labels, h.mult, h.unit, comult, counit, antipode=s_mat,
        name=name or f"{h.name}_q",
    )
    report = validate_full(out)
    if not report.ok:
        raise Inconsistent(f"deformation failed validation: {report.failures()}")
    return out


def regularize(h):
    """Deform by q = g^{-1} so that S^2 = id on H_min; idempotent.

    g is the classifying element recovered by minimal_data; the deformation
    preconditions are verified on q and surfaced as PreconditionUnmet if the
    extracted element fails them.
    """
    one = Element(h, h.unit)
    if is_regular(h):
        return h, one
    md = minimal_data(h)
    q = md.g.inv()
    out = deform_q(h, q, name=f"{h.name}_reg")
    if not is_regular(out):
        raise Inconsistent("deformation by g^{-1} did not regularize S^2")
    return out, q


# ---------------------------------------------------------------------------
# general twists


@dataclass
class Twist:
    theta: dict  # sparse pair tensor in H (x) H
    theta_bar: dict


def _check_twist_invariants(h, t):
    if h.mul_pair_dicts(h.delta_one, t.theta) != t.theta:
        raise NotATwist("Theta does not lie in Delta(1)(H (x) H)")
    if h.mul_pair_dicts(t.theta_bar, h.delta_one) != t.theta_bar:
        raise NotATwist("Theta_bar does not lie in (H (x) H)Delta(1)")
    if h.mul_pair_dicts(t.theta, t.theta_bar) != h.delta_one:
        raise NotATwist("Theta Theta_bar != Delta(1)")


def twist_conjugator(h, t):
    """v = S(Theta^(1)) Theta^(2) and its inverse from Theta_bar; verified."""
    zero = h.field.zero()
    v = [zero] * h.dim
    for (a, b), c in t.theta.items():
        term = h.mul_vec(h.apply_S(_basis(h, a)), _basis(h, b))
        v = [x + c * y for x, y in zip(v, term)]
    v_inv = [zero] * h.dim
    for (a, b), c in t.theta_bar.items():
        term = h.mul_vec(_basis(h, a), h.apply_S(_basis(h, b)))
        v_inv = [x + c * y for x, y in zip(v_inv, term)]
    if tuple(h.mul_vec(v, v_inv)) != h.unit or tuple(h.mul_vec(v_inv, v)) != h.unit:
        raise VNotInvertible("S(Theta^(1))Theta^(2) is not inverted by the Theta_bar formula")
    return v, v_inv


def twist(h, t, name=None):
    """The twisted weak Hopf algebra H_Theta; every axiom re-verified.

    The new comultiplication is Theta_bar Delta(.) Theta (coassociativity is
    checked, not assumed), the counit and algebra are unchanged, and the
    antipode is v^{-1} S(.) v.  The counital maps of the result must agree
    with the closed formulas eps_t(x) = eps(Theta^(1) x) Theta^(2) and
    eps_s(x) = Theta_bar^(1) eps(x Theta_bar^(2)).
    """
    _check_twist_invariants(h, t)
    comult = [
        h.mul_pair_dicts(t.theta_bar, h.mul_pair_dicts(h.comult[i], t.theta))
        for i in range(h.dim)
    ]
    v, v_inv = twist_conjugator(h, t)
    s_mat = h.left_mult_matrix(v_inv) @ h.right_mult_matrix(v) @ h.S
    out = WeakHopfAlgebra(
        h.field, h.labels, h.mult, h.unit, comult, h.counit, antipode=s_mat,
        name=name or f"{h.name}_twisted",
    )
    report = validate_full(out)
    if not report.ok:
        raise NotATwist(f"twisted structure fails {[c.name for c in report.failures()]}")
    zero = h.field.zero()
    e2 = h.counit_product
    cols_t = []
    cols_s = []
    for i in range(h.dim):
        col = [zero] * h.dim
        for (a, b), c in t.theta.items():
            val = c * e2[a][i]
            if val:
                col[b] += val
        cols_t.append(col)
        col = [zero] * h.dim
        for (a, b), c in t.theta_bar.items():
            val = c * e2[i][b]
            if val:
                col[a] += val
        cols_s.append(col)
    if Matrix.from_columns(h.field, cols_t) != out.eps_t_mat:
        raise Mismatch("twisted eps_t differs from the closed formula")
    if Matrix.from_columns(h.field, cols_s) != out.eps_s_mat:
        raise Mismatch("twisted eps_s differs from the closed formula")
    return out


# ---------------------------------------------------------------------------
# finite abelian groups of group-like elements and their characters


class AbelianGrouplikes:
    """A finite abelian group of group-like elements of a Hopf algebra U.

    Elements are given as coefficient vectors; closure, commutativity,
    identity, and inverses are all verified exactly.  Characters are built
    along a subgroup chain: each new generator's value is a root of unity
    solving m t = s (mod exponent), giving all |A| characters
    deterministically.
    """

    def __init__(self, u, elements):
        self.u = u
        vecs = [tuple(u.field.coerce(c) for c in (e.coeffs if isinstance(e, Element) else e)) for e in elements]
        if len(set(vecs)) != len(vecs):
            raise InvalidPresentation("repeated elements in A")
        for v in vecs:
            if not is_grouplike(u, v):
                raise InvalidPresentation("A contains a non-group-like element")
        index = {v: i for i, v in enumerate(vecs)}
        n = len(vecs)
        table = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                prod = tuple(u.mul_vec(vecs[i], vecs[j]))
                if prod not in index:
                    raise InvalidPresentation("A is not closed under multiplication")
                table[i][j] = index[prod]
        for i in range(n):
            for j in range(n):
                if table[i][j] != table[j][i]:
                    raise InvalidPresentation("A is not abelian")
        identity = None
        for e in range(n):
            if all(table[e][j] == j for j in range(n)):
                identity = e
        if identity is None or vecs[identity] != u.unit:
            raise InvalidPresentation("A has no identity equal to 1 of U")
        inverse = []
        for i in range(n):
            inv = [j for j in range(n) if table[i][j] == identity]
            if len(inv) != 1:
                raise InvalidPresentation("A has an element without a unique inverse")
            inverse.append(inv[0])
        self.vectors = vecs
        self.table = table
        self.identity = identity
        self.inverse = inverse
        self.order = n
        self.orders = [self._element_order(i) for i in range(n)]
        self.exponent = 1
        for o in self.orders:
            self.exponent = self.exponent * o // _gcd_int(self.exponent, o)
        self.characters = self._characters()
        self.char_index = {c: i for i, c in enumerate(self.characters)}

    def _element_order(self, i):
        k, x = 1, i
        while x != self.identity:
            x = self.table[x][i]
            k += 1
        return k

    def power(self, i, k):
        out = self.identity
        for _ in range(k):
            out = self.table[out][i]
        return out

    def _characters(self):
        e_exp = self.exponent
        members = [self.identity]
        chars = [{self.identity: 0}]
        for x in range(self.order):
            if x in members:
                continue
            m = 1
            p = x
            while p not in members:
                p = self.table[p][x]
                m += 1
            base = p  # x^m, already in the subgroup
            new_members = list(members)
            for j in range(1, m):
                xj = self.power(x, j)
                new_members.extend(self.table[u][xj] for u in members)
            new_chars = []
            for chi in chars:
                s = chi[base]
                assert s % m == 0, "character extension obstruction"
                for k in range(m):
                    t = s // m + k * (e_exp // m)
                    ext = dict(chi)
                    for j in range(1, m):
                        xj = self.power(x, j)
                        for u in members:
                            ext[self.table[u][xj]] = (chi[u] + j * t) % e_exp
                    new_chars.append(ext)
            members = new_members
            chars = new_chars
        out = [tuple(chi[i] for i in range(self.order)) for chi in chars]
        out.sort()
        assert len(out) == self.order
        return out

    def char_product(self, a, b):
        ca, cb = self.characters[a], self.characters[b]
        prod = tuple((x + y) % self.exponent for x, y in zip(ca, cb))
        return self.char_index[prod]

    def char_value(self, field, chi_idx, elt_idx, inverse=False):
        t = self.characters[chi_idx][elt_idx]
        if inverse:
            t = (-t) % self.exponent
        if t == 0:
            return field.one()
        if self.exponent <= 2:
            return field.from_int(-1)
        return field.zeta((field.order // self.exponent) * t)

    def minimal_idempotent(self, field, chi_idx):
        """P_mu = (1/|A|) sum_a mu(a^{-1}) a as an element of U."""
        scale = field.div(field.one(), field.from_int(self.order))
        vec = [field.zero()] * self.u.dim
        for a in range(self.order):
            val = scale * self.char_value(field, chi_idx, a, inverse=True)
            vec = [x + val * y for x, y in zip(vec, self.vectors[a])]
        return vec


def _gcd_int(a, b):
    while b:
        a, b = b, a % b
    return a


# ---------------------------------------------------------------------------
# dynamical twists


@dataclass
class DynamicalTwistData:
    """A Hopf algebra U, a finite abelian group A of its group-likes, and J.

    ``j`` maps character indices (in the canonical sorted order of
    AbelianGrouplikes.characters) to sparse pair tensors over U (x) U; None
    stands for the constant family 1 (x) 1.
    """

    u: WeakHopfAlgebra
    grouplikes: list
    j: dict = None


@dataclass
class DynamicalTwist:
    host: WeakHopfAlgebra  # M_{|A|} (x) U
    twist: Twist
    group: AbelianGrouplikes
    matrix_dim: int

    def host_index(self, row, col, u_idx):
        return (row * self.matrix_dim + col) * self.group.u.dim + u_idx


def _j_tensor(u, data, group, chi_idx):
    if not data.j or data.j.get(chi_idx) is None:
        one = {}
        for i, ci in enumerate(u.unit):
            if ci:
                for k, ck in enumerate(u.unit):
                    if ck:
                        one[(i, k)] = ci * ck
        return one
    raw = data.j[chi_idx]
    return {key: u.field.coerce(c) for key, c in raw.items() if u.field.coerce(c)}


def _j_inverse(u, tensor_algebra, j_pairs):
    vec = [u.field.zero()] * (u.dim * u.dim)
    for (a, b), c in j_pairs.items():
        vec[a * u.dim + b] = c
    try:
        inv = Element(tensor_algebra, vec).inv()
    except NotInvertible as exc:
        raise InvalidPresentation(f"J value is not invertible: {exc}") from exc
    out = {}
    for pos, c in enumerate(inv.coeffs):
        if c:
            out[divmod(pos, u.dim)] = c
    return out


def verify_dynamical_data(data):
    """Check Hopf-ness of U, the group A, normalization, commutation with
    Delta(A), invertibility of J, and the shifted cocycle equation per
    character.  Returns (group, j_tensors, j_inverses)."""
    u = data.u
    if u.target_base.dim != 1 or not u.target_base.contains(u.unit):
        raise InvalidPresentation("U is not a Hopf algebra (H_t != k1)")
    group = AbelianGrouplikes(u, data.grouplikes)
    if group.exponent > 2:
        if u.field.kind != "cyclotomic" or u.field.order % group.exponent:
            raise FieldTooSmall(
                f"characters of exponent {group.exponent} need zeta_{group.exponent}"
            )
    tensor_algebra = tensor_product(u, u)
    j_tensors = {}
    j_inverses = {}
    for chi in range(group.order):
        j = _j_tensor(u, data, group, chi)
        j_tensors[chi] = j
        j_inverses[chi] = _j_inverse(u, tensor_algebra, j)
        # normalization (eps (x) id)J = (id (x) eps)J = 1
        left = [u.field.zero()] * u.dim
        right = [u.field.zero()] * u.dim
        for (a, b), c in j.items():
            if u.counit[a]:
                left = [x + c * u.counit[a] * y for x, y in zip(left, _basis(u, b))]
            if u.counit[b]:
                right = [x + c * u.counit[b] * y for x, y in zip(right, _basis(u, a))]
        if tuple(left) != u.unit or tuple(right) != u.unit:
            raise InvalidPresentation(f"J({chi}) violates counit normalization")
        # commutation with Delta(a) for every a in A
        for a in range(group.order):
            da = u.comul_vec(group.vectors[a])
            if u.mul_pair_dicts(j, da) != u.mul_pair_dicts(da, j):
                raise InvalidPresentation(f"J({chi}) does not commute with Delta(A)")
    # shifted cocycle equation, brute tensor contraction per character
    p_vectors = [group.minimal_idempotent(u.field, m) for m in range(group.order)]
    for lam in range(group.order):
        j_lam = j_tensors[lam]
        lhs_left = {}
        for (c, d), cf in j_lam.items():
            for (a, b), cc in u.comult[c].items():
                key = (a, b, d)
                lhs_left[key] = lhs_left.get(key, u.field.zero()) + cf * cc
        shifted = {}
        for m in range(group.order):
            j_shift = j_tensors[group.char_product(lam, m)]
            pvec = p_vectors[m]
            for (c, d), cf in j_shift.items():
                for k, pk in enumerate(pvec):
                    if pk:
                        key = (c, d, k)
                        shifted[key] = shifted.get(key, u.field.zero()) + cf * pk
        shifted = {k: v for k, v in shifted.items() if v}
        lhs = u.mul_triple_dicts(lhs_left, shifted)
        rhs_left = {}
        for (c, d), cf in j_lam.items():
            for (a, b), cc in u.comult[d].items():
                key = (c, a, b)
                rhs_left[key] = rhs_left.get(key, u.field.zero()) + cf * cc
        one_j = {}
        for i, ci in enumerate(u.unit):
            if ci:
                for (c, d), cf in j_lam.items():
                    one_j[(i, c, d)] = ci * cf
        rhs = u.mul_triple_dicts(rhs_left, one_j)
        if lhs != rhs:
            diff = {k: v for k, v in lhs.items() if rhs.get(k) != v}
            raise DynamicalEquationViolated(f"character {lam}: residual on {len(diff)} triples")
    return group, j_tensors, j_inverses


def dynamical_theta(data):
    """Assemble the twist of M_{|A*|} (x) U from a verified dynamical family."""
    group, j_tensors, j_inverses = verify_dynamical_data(data)
    u = data.u
    field = u.field
    nchars = group.order
    labels = [f"E{a + 1}{b + 1}" for a in range(nchars) for b in range(nchars)]
    m_part = matrix_wha(nchars, field=field, labels=labels, name=f"M{nchars}")
    host = tensor_product(m_part, u, name=f"M{nchars}(x){u.name}")
    du = u.dim

    def hidx(row, col, k):
        return (row * nchars + col) * du + k

    p_vectors = [group.minimal_idempotent(field, m) for m in range(nchars)]
    theta = {}
    theta_bar = {}
    for lam in range(nchars):
        for m in range(nchars):
            lam_m = group.char_product(lam, m)
            pvec = p_vectors[m]
            for (c, d), cf in j_tensors[lam].items():
                second = u.mul_vec(_basis(u, d), pvec)  # J^(2) P_mu
                for k, ck in enumerate(second):
                    if ck:
                        key = (hidx(lam, lam_m, c), hidx(lam, lam, k))
                        val = theta.get(key, field.zero()) + cf * ck
                        if val:
                            theta[key] = val
                        elif key in theta:
                            del theta[key]
            for (c, d), cf in j_inverses[lam].items():
                second = u.mul_vec(pvec, _basis(u, d))  # P_mu J^(-2)
                for k, ck in enumerate(second):
                    if ck:
                        key = (hidx(lam_m, lam, c), hidx(lam, lam, k))
                        val = theta_bar.get(key, field.zero()) + cf * ck
                        if val:
                            theta_bar[key] = val
                        elif key in theta_bar:
                            del theta_bar[key]
    t = Twist(theta=theta, theta_bar=theta_bar)
    _check_twist_invariants(host, t)
    return DynamicalTwist(host=host, twist=t, group=group, matrix_dim=nchars)


def dynamical_cosemisimplicity_check(data):
    """Semisimplicity and cosemisimplicity of the dynamical twist H_Theta.

    Follows the two routes: the canonical element g = S(v)^{-1} v pairs to
    the regular trace like the identity against the whole center (the exact
    form of "Tr(pi(g)) = deg pi for every irreducible pi"), which forces
    Tr(S_Theta^2) = dim H_Theta, cross-checked by the direct matrix trace;
    biconnectedness plus the nonzero trace then give semisimplicity of both
    H_Theta and its dual, which is also decided directly by Maschke.
    """
    if not is_semisimple(data.u):
        raise PreconditionUnmet("U is not semisimple")
    build = dynamical_theta(data)
    host = build.host
    twisted = twist(host, build.twist, name=f"{host.name}_dyn")
    v, v_inv = twist_conjugator(host, build.twist)
    g = host.mul_vec(host.apply_S(v_inv), v)
    g_elt = Element(host, g)
    g_inv = g_elt.inv()
    center = host.center
    one = Element(host, host.unit)

    def pairs_like_identity(x):
        diff = (x - one).coeffs
        for z in center.rows:
            tr = host.left_mult_matrix(host.mul_vec(diff, z)).trace()
            if tr:
                return False
        return True

    g_ok = pairs_like_identity(g_elt)
    g_inv_ok = pairs_like_identity(g_inv)
    tr_s2 = (twisted.S @ twisted.S).trace()
    from .semisimplicity import connectedness

    conn = connectedness(twisted)
    semis = is_semisimple(twisted)
    cosemis = is_semisimple(twisted.dual)
    report = {
        "dim": twisted.dim,
        "tr_s2_theta": tr_s2,
        "tr_s2_equals_dim": tr_s2 == twisted.dim,
        "g_trace_condition": g_ok,
        "g_inverse_trace_condition": g_inv_ok,
        "biconnected": conn["biconnected"],
        "corollary_route": (not (conn["biconnected"] and tr_s2 != 0)) or (semis and cosemis),
        "semisimple": semis,
        "cosemisimple_by_maschke_on_dual": cosemis,
        "twisted": twisted,
    }
    report["ok"] = all(
        report[k]
        for k in (
            "tr_s2_equals_dim",
            "g_trace_condition",
            "g_inverse_trace_condition",
            "biconnected",
            "corollary_route",
            "semisimple",
            "cosemisimple_by_maschke_on_dual",
        )
    )
    return report

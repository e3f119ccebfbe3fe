"""Named verification suite: every structural identity the library claims,
runnable as a whole or per suite, deterministically seeded.

Each check returns (passed, detail).  The registry backs the `verify` CLI
verb; the identity column states the mathematical fact being exercised.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import clifford, kuga, lattices, linalg, multivector, reps, scalars
from . import spingeo, weil
from .clifford import CV, commutator, exp_nilpotent, sigma_action, spin_so_iso
from .lattices import make_Splus, make_V
from .linalg import det, identity, mat, mat_mul, mat_vec, rank
from .multivector import (Multivector, contract, derive_multivector,
                          hodge_star, pfaffian, pluecker, star_matrix, wedge,
                          DEGREE4_MASKS, coords_degree)
from .scalars import (QuadExt, TowerScalar, hilbert_symbol, relevant_places,
                      REAL_PLACE)
from .spingeo import (Spinor, graph_basis, random_alternating,
                      random_isotropic_spinor, spinor_map, splus_lattice,
                      subspace_of_spinor)


@dataclass(frozen=True)
class Check:
    name: str
    suite: str
    identity: str
    fn: object


CHECKS = []


def register(name, suite, identity):
    def wrap(fn):
        CHECKS.append(Check(name, suite, identity, fn))
        return fn
    return wrap


def _rand_rational(rng, span=6):
    d = rng.randint(1, 4)
    return Fraction(rng.randint(-span, span), d)


def _rand_nonzero_rational(rng, span=6):
    while True:
        x = _rand_rational(rng, span)
        if x != 0:
            return x


# -- scalars -----------------------------------------------------------------

@register("field-axioms", "scalars",
          "associativity, commutativity, distributivity, inverses for the "
          "three scalar types")
def check_field_axioms(seed):
    rng = random.Random(seed)
    m = -5
    for _ in range(1000):
        kind = rng.randrange(3)
        if kind == 0:
            xs = [_rand_rational(rng) for _ in range(3)]
        elif kind == 1:
            xs = [QuadExt(_rand_rational(rng), _rand_rational(rng), m)
                  for _ in range(3)]
        else:
            xs = [TowerScalar(*(_rand_rational(rng) for _ in range(4)), m=m)
                  for _ in range(3)]
        a, b, c = xs
        if (a + b) + c != a + (b + c) or a + b != b + a:
            return False, "additive axioms failed"
        if (a * b) * c != a * (b * c) or a * b != b * a:
            return False, "multiplicative axioms failed"
        if a * (b + c) != a * b + a * c:
            return False, "distributivity failed"
        if a != 0 and (a / a) != 1:
            return False, "inverse failed"
    return True, "1000 random triples"


@register("conjugation-and-norm", "scalars",
          "conj is an involution and Nm(xy) = Nm(x) Nm(y)")
def check_conj_norm(seed):
    rng = random.Random(seed)
    for _ in range(300):
        x = QuadExt(_rand_rational(rng), _rand_rational(rng), -3)
        y = QuadExt(_rand_rational(rng), _rand_rational(rng), -3)
        if x.conj().conj() != x:
            return False, "conj not an involution"
        if (x * y).norm() != x.norm() * y.norm():
            return False, "norm not multiplicative"
        t = TowerScalar(*(_rand_rational(rng) for _ in range(4)), m=-3)
        if t.conj_i().conj_m() != t.conj_m().conj_i():
            return False, "conjugations do not commute"
    return True, "300 random pairs"


@register("hilbert-bilinearity", "scalars",
          "(a,b)p = (b,a)p and (a a', b)p = (a,b)p (a',b)p")
def check_hilbert_bilinear(seed):
    rng = random.Random(seed)
    places = [REAL_PLACE, 2, 3, 5, 7, 11]
    for _ in range(300):
        a = _rand_nonzero_rational(rng)
        a2 = _rand_nonzero_rational(rng)
        b = _rand_nonzero_rational(rng)
        p = rng.choice(places)
        if hilbert_symbol(a, b, p) != hilbert_symbol(b, a, p):
            return False, f"symmetry failed at {p}"
        lhs = hilbert_symbol(a * a2, b, p)
        rhs = hilbert_symbol(a, b, p) * hilbert_symbol(a2, b, p)
        if lhs != rhs:
            return False, f"multiplicativity failed at {p}"
    return True, "300 random triples over 6 places"


@register("hilbert-product-formula", "scalars",
          "the product of (a,b)p over all places is +1")
def check_product_formula(seed):
    rng = random.Random(seed)
    for _ in range(100):
        a = _rand_nonzero_rational(rng, span=20)
        b = _rand_nonzero_rational(rng, span=20)
        prod = 1
        for p in relevant_places(a, b):
            prod *= hilbert_symbol(a, b, p)
        if prod != 1:
            return False, f"product formula failed for {a}, {b}"
    return True, "100 random pairs"


# -- lattices ----------------------------------------------------------------

def _random_unimodular(rng, n):
    m = identity(n)
    for _ in range(2 * n):
        i, j = rng.randrange(n), rng.randrange(n)
        if i == j:
            continue
        c = rng.randint(-2, 2)
        for k in range(n):
            m[i][k] += c * m[j][k]
    return m


@register("signature-invariance", "lattices",
          "Sylvester signature is unchanged by unimodular change of basis")
def check_signature_invariance(seed):
    rng = random.Random(seed)
    for lat in (make_V(), make_Splus()):
        for _ in range(10):
            t = _random_unimodular(rng, 8)
            tt = [[t[b][a] for b in range(8)] for a in range(8)]
            g2 = mat_mul(tt, mat_mul(lat.gram, t))
            if lattices.signature(lattices.BilinearLattice(g2)) != \
                    lattices.signature(lat):
                return False, "signature moved under congruence"
    return True, "20 random congruences"


@register("quadric-is-isotropy", "lattices",
          "z on the quadric iff (z,z) = 0 iff z1 z5 + z2 z6 + z3 z7 + "
          "z4 z8 = 0")
def check_quadric_isotropy(seed):
    rng = random.Random(seed)
    lat = make_Splus()
    for _ in range(1000):
        z = random_isotropic_spinor(rng)
        qsum = sum(z.z[i] * z.z[i + 4] for i in range(4))
        if lat.pair(z.z, z.z) != 2 * qsum or qsum != 0:
            return False, "isotropic construction left the quadric"
    return True, "1000 random isotropic spinors"


@register("complement-orthogonality", "lattices",
          "every output of the complement pairs to zero with every input")
def check_complement(seed):
    rng = random.Random(seed)
    lat = make_Splus()
    for _ in range(25):
        vs = [[rng.randint(-3, 3) for _ in range(8)] for _ in range(2)]
        if all(all(x == 0 for x in v) for v in vs):
            continue
        comp = lattices.orthogonal_complement(lat, vs)
        for w in comp:
            for v in vs:
                if lat.pair(w.coords, v) != 0:
                    return False, "complement vector pairs nonzero"
    return True, "25 random vector pairs"


# -- exterior algebra --------------------------------------------------------

def _random_multivector(rng, n, nterms=4):
    terms = {}
    for _ in range(nterms):
        terms[rng.randrange(1 << n)] = Fraction(rng.randint(-3, 3))
    return Multivector(n, terms)


@register("wedge-algebra", "exterior",
          "wedge is associative and graded-commutative")
def check_wedge(seed):
    rng = random.Random(seed)
    for _ in range(1000):
        x = _random_multivector(rng, 4)
        y = _random_multivector(rng, 4)
        z = _random_multivector(rng, 4)
        if wedge(wedge(x, y), z) != wedge(x, wedge(y, z)):
            return False, "associativity failed"
    for _ in range(200):
        ka, kb = rng.randrange(4), rng.randrange(4)
        a = Multivector(4, {m: Fraction(rng.randint(-2, 2))
                            for m in range(16)
                            if bin(m).count('1') == ka})
        b = Multivector(4, {m: Fraction(rng.randint(-2, 2))
                            for m in range(16)
                            if bin(m).count('1') == kb})
        sign = -1 if (ka * kb) % 2 else 1
        if wedge(a, b) != wedge(b, a).scale(sign):
            return False, "graded commutativity failed"
    return True, "1000 associativity + 200 commutativity triples"


@register("contraction-derivation", "exterior",
          "D(x ^ y) = D(x) ^ y + (-1)^deg(x) x ^ D(y)")
def check_contraction(seed):
    rng = random.Random(seed)
    for _ in range(300):
        k = rng.randrange(4)
        dual = [0] * 4
        dual[rng.randrange(4)] = Fraction(rng.randint(1, 3))
        x = Multivector(4, {m: Fraction(rng.randint(-2, 2))
                            for m in range(16) if bin(m).count('1') == k})
        y = _random_multivector(rng, 4)
        lhs = contract(dual, wedge(x, y))
        sign = -1 if k % 2 else 1
        rhs = wedge(contract(dual, x), y) + wedge(x, contract(dual, y)).scale(sign)
        if lhs != rhs:
            return False, "derivation rule failed"
    return True, "300 random pairs"


@register("pfaffian-congruence", "exterior",
          "Pfaff(T^t B T) = det(T) Pfaff(B), and Pfaff(B)^2 = det(B)")
def check_pfaffian(seed):
    rng = random.Random(seed)
    for size in (4, 6):
        for _ in range(25):
            b = random_alternating(rng, size=size)
            if pfaffian(b) ** 2 != det(b):
                return False, "Pfaffian square is not the determinant"
            t = [[Fraction(rng.randint(-2, 2)) for _ in range(size)]
                 for _ in range(size)]
            tt = [[t[j][i] for j in range(size)] for i in range(size)]
            btb = mat_mul(tt, mat_mul(b, t))
            if pfaffian(btb) != det(t) * pfaffian(b):
                return False, "congruence transformation rule failed"
    return True, "50 random matrices of sizes 4 and 6"


@register("pluecker-equivariance", "exterior",
          "pluecker(M A) = det(A) pluecker(M) for 4 x 4 A")
def check_pluecker_equivariance(seed):
    rng = random.Random(seed)
    for _ in range(50):
        m = [[Fraction(rng.randint(-2, 2)) for _ in range(4)]
             for _ in range(8)]
        a = [[Fraction(rng.randint(-2, 2)) for _ in range(4)]
             for _ in range(4)]
        lhs = pluecker(mat_mul(m, a))
        rhs = pluecker(m).scale(det(a))
        if lhs != rhs:
            return False, "equivariance failed"
    return True, "50 random pairs"


@register("star-self-adjoint", "exterior",
          "(star x, y) = (x, star y) for the induced degree-4 pairing")
def check_star_self_adjoint(seed):
    from .multivector import induced_gram4
    star = star_matrix()
    g4 = induced_gram4(make_V().gram)
    idx = {m: i for i, m in enumerate(DEGREE4_MASKS)}
    gm = [[Fraction(0)] * 70 for _ in range(70)]
    for (ma, mb), v in g4.items():
        gm[idx[ma]][idx[mb]] = v
    lhs = mat_mul([[star[b][a] for b in range(70)] for a in range(70)], gm)
    rhs = mat_mul(gm, star)
    return (lhs == rhs), "70 x 70 exact matrix identity"


# -- clifford ----------------------------------------------------------------

@register("spin-dimension", "clifford",
          "the 28 basis elements of spin(V) are independent, n(2n-1) = 28")
def check_spin_dimension(seed):
    r, n = clifford.spin_v_dimension_check()
    return (r == 28 and n == 28), f"rank {r} of {n}"


@register("degree2-commutator", "clifford",
          "[x y, v] = (y,v) x - (x,v) y for vectors x, y, v")
def check_commutator_identity(seed):
    rng = random.Random(seed)
    alg = CV()
    lat = make_V()
    for _ in range(1000):
        xs = [[Fraction(rng.randint(-2, 2)) for _ in range(8)]
              for _ in range(3)]
        x, y, v = (alg.vector(c) for c in xs)
        lhs = commutator(x * y, v)
        rhs = (alg.vector(xs[0]).scale(lat.pair(xs[1], xs[2])) -
               alg.vector(xs[1]).scale(lat.pair(xs[0], xs[2])))
        if lhs != rhs:
            return False, "commutator identity failed"
    return True, "1000 random triples"


@register("module-structure", "clifford",
          "sigma(x y, n) = sigma(x, sigma(y, n)) and evens preserve the "
          "half-spin split")
def check_module_structure(seed):
    rng = random.Random(seed)
    alg = CV()
    for _ in range(1000):
        x = clifford.CliffordElement(
            alg, {rng.randrange(256): Fraction(rng.randint(-2, 2))
                  for _ in range(2)})
        y = clifford.CliffordElement(
            alg, {rng.randrange(256): Fraction(rng.randint(-2, 2))
                  for _ in range(2)})
        eta = _random_multivector(rng, 4)
        if sigma_action(x * y, eta) != sigma_action(x, sigma_action(y, eta)):
            return False, "module law failed"
    for _ in range(100):
        even_masks = [m for m in range(256) if bin(m).count('1') % 2 == 0]
        x = clifford.CliffordElement(
            alg, {rng.choice(even_masks): Fraction(rng.randint(-2, 2))
                  for _ in range(3)})
        eta = Multivector(4, {m: Fraction(rng.randint(-2, 2))
                              for m in spingeo.EVEN_MASKS})
        img = sigma_action(x, eta)
        if any(mm not in spingeo.EVEN_MASKS for mm in img.terms):
            return False, "even element mixed the halves"
    return True, "1000 module law + 100 parity trials"


@register("twisted-conjugation-orthogonal", "clifford",
          "x v x* defines an orthogonal matrix of determinant one")
def check_twisted_conjugation(seed):
    rng = random.Random(seed)
    g = make_V().gram
    for _ in range(25):
        gelt = clifford.random_spin_group_element(rng)
        try:
            mtx = clifford.twisted_conjugation(gelt)
        except ValueError:
            return False, "product of exponentials left the spin group"
        mt = [[mtx[b2][a2] for b2 in range(8)] for a2 in range(8)]
        if mat_mul(mt, mat_mul(g, mtx)) != g or det(mtx) != 1:
            return False, "matrix is not special orthogonal"
    return True, "25 random group elements"


# -- spinor geometry ---------------------------------------------------------

@register("spinor-image-isotropic", "spinor",
          "the spinor image of every alternating matrix lies on the quadric")
def check_spinor_isotropic(seed):
    rng = random.Random(seed)
    for _ in range(500):
        b = random_alternating(rng)
        z = spinor_map(b)
        if not z.is_isotropic():
            return False, "image left the quadric"
    return True, "500 random matrices"


@register("spinor-equivariance", "spinor",
          "the spinor map intertwines the vector and half-spin actions")
def check_spinor_equivariance(seed):
    rng = random.Random(seed)
    from .reps import splus_matrix
    ok = 0
    for _ in range(100):
        g = clifford.random_spin_group_element(rng)
        rho_v = clifford.twisted_conjugation(g)
        rho_s = splus_matrix(g)
        b2 = random_alternating(rng, lo=-2, hi=2)
        z = spinor_map(b2)
        sub = subspace_of_spinor(z)
        moved = mat_mul(rho_v, sub.basis)
        gz = Spinor(mat_vec(rho_s, z.z))
        sub2 = subspace_of_spinor(gz)
        joint = [moved[i] + sub2.basis[i] for i in range(8)]
        if rank(mat(joint)) != 4:
            return False, "moved subspace does not match moved spinor"
        ok += 1
    return True, f"{ok} random (g, B) pairs"


@register("subspace-parity", "spinor",
          "spinor subspaces meet the reference half in even dimension")
def check_parity(seed):
    rng = random.Random(seed)
    for _ in range(200):
        z = random_isotropic_spinor(rng)
        if z.is_zero():
            continue
        sub = subspace_of_spinor(z)
        if sub.parity != 0:
            return False, "odd parity"
    return True, "200 random isotropic spinors"


@register("paper-point-fixtures", "spinor",
          "the two distinguished complex quadric points and their "
          "2-dimensional intersection")
def check_nu_fixtures(seed):
    i = QuadExt(0, 1, -1)
    one = QuadExt(1, 0, -1)
    b1 = [[0 * one, one, -i, -i],
          [-one, 0 * one, i, -i],
          [i, -i, 0 * one, -one],
          [i, i, one, 0 * one]]
    b2 = [[0 * one, -one, -i, i],
          [one, 0 * one, -i, -i],
          [i, i, 0 * one, one],
          [-i, i, -one, 0 * one]]
    ell1 = spinor_map(b1)
    ell2 = spinor_map(b2)
    if ell1.z != [one, one, -i, -i, one, one, -i, -i]:
        return False, "first fixture mismatched"
    if ell2.z != [one, -one, -i, i, one, -one, -i, i]:
        return False, "second fixture mismatched"
    z1 = graph_basis(b1)
    z2 = graph_basis(b2)
    joint = [z1[r] + z2[r] for r in range(8)]
    inter = 8 - rank(mat(joint))
    c = [[z1[r][k] for k in range(4)] for r in range(8)]
    d = [[z2[r][k] for k in range(4)] for r in range(8)]
    w1 = [c[r][0] - i * c[r][2] for r in range(8)]
    w2 = [d[r][0] - i * d[r][2] for r in range(8)]
    if w1 != w2:
        return False, "column identity c1 - i c3 = d1 - i d3 failed"
    return inter == 2, f"intersection dimension {inter}"


# -- representations ---------------------------------------------------------

@register("bracket-compatibility", "reps",
          "action([x, y]) = [action(x), action(y)] on all seven spaces")
def check_brackets(seed):
    rng = random.Random(seed)
    table = clifford.spin_v_xyz_table()
    spaces = ["V", "S+", "S-", "Wedge2V", "Sym2S+", "Wedge2S+"]
    for trial in range(12):
        x = table[rng.randrange(28)][1].scale(Fraction(rng.randint(1, 3)))
        y = table[rng.randrange(28)][1].scale(Fraction(rng.randint(1, 3)))
        z = commutator(x, y)
        name = spaces[trial % len(spaces)]
        mx = reps.derived_action(x, name)
        my = reps.derived_action(y, name)
        mz = reps.derived_action(z, name)
        if mat_mul(mx, my) != [[a + b for a, b in zip(ra, rb)]
                               for ra, rb in zip(mz, mat_mul(my, mx))]:
            return False, f"bracket failed on {name}"
    x = table[0][1]
    y = table[20][1]
    z = commutator(x, y)
    mx = reps.derived_action(x, "Wedge4V")
    my = reps.derived_action(y, "Wedge4V")
    mz = reps.derived_action(z, "Wedge4V")
    lhs = mat_mul(mx, my)
    rhs = [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(mz, mat_mul(my, mx))]
    if lhs != rhs:
        return False, "bracket failed on Wedge4V"
    return True, "randomized pairs on all seven spaces"


@register("symmetric-square-split", "reps",
          "squares of quadric points span 35 dimensions and the invariant "
          "line completes the 36")
def check_sym_split(seed):
    samples = reps.quadric_square_span()
    vecs = [u for _, u in samples] + [reps.gamma0_line()]
    return rank(mat(vecs)) == 36, "35 + 1 = 36 split"


@register("star-eigenspaces-stable", "reps",
          "the Hodge star commutes with every derived degree-4 action")
def check_star_stable(seed):
    rng = random.Random(seed)
    star = star_matrix()
    table = clifford.spin_v_xyz_table()
    for _ in range(4):
        x = table[rng.randrange(28)][1]
        m = reps.derived_action(x, "Wedge4V")
        if mat_mul(star, m) != mat_mul(m, star):
            return False, "star does not commute with the action"
    return True, "4 random generators"


@register("cayley-image-one-eigenspace", "reps",
          "the symmetric-square image lands in a single star eigenspace")
def check_phi_eigenspace(seed):
    star = star_matrix()
    phi = reps.phi_matrix()
    sgn = reps.gamma2alpha_star_sign()
    for col in range(0, 36, 7):
        v = [phi[r][col] for r in range(70)]
        if any(x != 0 for x in v):
            sv = mat_vec(star, v)
            if sv != [sgn * x for x in v]:
                return False, "image vector not in the recorded eigenspace"
    return True, f"eigenvalue {sgn}"


@register("scaling-element-spectrum", "reps",
          "the sum of the Cartan generators acts on S+ with spectrum "
          "{2, -2, 0^6} and the stated eigenvectors")
def check_acth_spectrum(seed):
    x = CV().zero()
    for h in clifford.cartan_elements():
        x = x + h
    m = reps.derived_action(x, "S+")
    diag = [m[i][i] for i in range(8)]
    offdiag = all(m[i][j] == 0 for i in range(8) for j in range(8) if i != j)
    want = [Fraction(v) for v in (-2, 0, 0, 0, 2, 0, 0, 0)]
    return (offdiag and diag == want), f"diagonal {diag}"


# -- weil --------------------------------------------------------------------

STANDARD_H = (0, 1, 0, 0, 0, 1, 0, 0)
STANDARD_S = (1, 0, 0, 0, 1, 0, 0, 0)
STANDARD_PERIOD = ((0, 0, 1, 0, 0, 0, 1, 0), (0, 0, 0, 1, 0, 0, 0, 1))


@register("weil-datum-battery", "weil",
          "J^2 = -I, orthogonality, mu^2 = -d, commutation, balanced "
          "trace, E alternating (1,1) positive, trivial discriminant")
def check_weil_battery(seed):
    rng = random.Random(seed)
    for trial in range(4):
        datum = weil.make_weil_datum(
            Spinor(list(STANDARD_H)), Spinor(list(STANDARD_S)),
            seed=rng.randrange(10 ** 6))
        rep = weil.datum_report(datum)
        bad = [k for k, v in rep.items()
               if isinstance(v, bool) and not v]
        if bad:
            return False, f"failed: {bad}"
    return True, "4 sampled periods, full battery"


@register("hodge-criterion", "weil",
          "the derivation of J kills the Cayley class iff the period is "
          "orthogonal to the spinor")
def check_hodge_criterion(seed):
    rng = random.Random(seed)
    s = Spinor(list(STANDARD_S))
    h = Spinor(list(STANDARD_H))
    ok = 0
    for _ in range(10):
        per = weil.sample_period(h, s, seed=rng.randrange(10 ** 6))
        claim = weil.cayley_hodge_test(s, per)
        truth = per.pairs_to_zero_with(s.z)
        if claim != truth:
            return False, "criterion mismatched on orthogonal period"
        ok += 1
        per2 = weil.sample_period(Spinor(list(STANDARD_PERIOD[0])),
                                  h, seed=rng.randrange(10 ** 6))
        claim2 = weil.cayley_hodge_test(s, per2)
        truth2 = per2.pairs_to_zero_with(s.z)
        if claim2 != truth2:
            return False, "criterion mismatched on generic period"
        ok += 1
    return True, f"{ok} periods, both signs of the criterion"


@register("omega-invariant-line", "weil",
          "the polarization form spans the stabilizer-invariant line in "
          "degree 2")
def check_omega_line(seed):
    datum = weil.make_weil_datum(
        Spinor(list(STANDARD_H)), Spinor(list(STANDARD_S)),
        period=weil.Period(*STANDARD_PERIOD))
    return weil.omega_line_check(datum), "standard datum"


@register("field-scan", "weil",
          "the discriminant fields realize squarefree parts 1, 2, 3, 5")
def check_field_scan(seed):
    s = Spinor(list(STANDARD_S))
    hs = [Spinor([0, k, 0, 0, 0, 1, 0, 0]) for k in (1, 2, 3, 5)]
    parts = set()
    for h in hs:
        d, m, f = weil.field_parameters(h, s)
        parts.add(-m)
    return parts == {1, 2, 3, 5}, f"parts {sorted(parts)}"


# -- kuga --------------------------------------------------------------------

@register("even-algebra-closure", "kuga",
          "the even Clifford algebra of the complement has dimension 32 "
          "and is closed under multiplication")
def check_even_closure(seed):
    rng = random.Random(seed)
    _, lattice = kuga.complement_data(Spinor(list(STANDARD_H)),
                                      Spinor(list(STANDARD_S)))
    algebra = clifford.CliffordAlgebra(lattice)
    masks = tuple(algebra.basis_masks(even_only=True))
    if len(masks) != 32:
        return False, "dimension is not 32"
    for _ in range(50):
        x = algebra.element({rng.choice(masks): Fraction(rng.randint(-2, 2))
                             for _ in range(3)})
        y = algebra.element({rng.choice(masks): Fraction(rng.randint(-2, 2))
                             for _ in range(3)})
        if not (x * y).is_even():
            return False, "product left the even part"
    return True, "50 random products"


@register("center-basis-invariance", "kuga",
          "the center dimension and generator square class are unchanged "
          "by unimodular change of basis")
def check_center_invariance(seed):
    rng = random.Random(seed)
    _, lattice = kuga.complement_data(Spinor(list(STANDARD_H)),
                                      Spinor(list(STANDARD_S)))
    basis0, sq0 = kuga.ks_center(lattice)
    part0 = scalars.squarefree_part(sq0.numerator * sq0.denominator)
    for _ in range(2):
        t = _random_unimodular(rng, 6)
        tt = [[t[b][a] for b in range(6)] for a in range(6)]
        g2 = mat_mul(tt, mat_mul(lattice.gram, t))
        basis2, sq2 = kuga.ks_center(lattices.BilinearLattice(g2))
        part2 = scalars.squarefree_part(sq2.numerator * sq2.denominator)
        if len(basis2) != len(basis0) or part2 != part0:
            return False, "center changed under change of basis"
    return True, f"square class {part0}"


@register("ks-complex-structure", "kuga",
          "J_KS squares to -I and commutes with right multiplications")
def check_ks_structure(seed):
    datum = kuga.ks_complex_structure(Spinor(list(STANDARD_H)),
                                      Spinor(list(STANDARD_S)),
                                      weil.Period(*STANDARD_PERIOD))
    comm = kuga.ks_right_commutation(datum, seed=seed)
    return comm, "construction validates J^2 = -I internally"


# -- mukai -------------------------------------------------------------------

@register("mukai-pairing", "mukai",
          "(1,0,-n)^2 = 2n and the moduli dimension is 2n + 2")
def check_mukai(seed):
    for n in (3, 4, 5):
        sq, dim = lattices.moduli_dimension(n)
        if sq != 2 * n or dim != 2 * n + 2:
            return False, f"n = {n} gave {sq}, {dim}"
    return True, "n in {3, 4, 5}"


def run_checks(suite=None, seed=20240):
    """Run the registered checks; returns a list of result dicts."""
    results = []
    for check in CHECKS:
        if suite and check.suite != suite:
            continue
        try:
            ok, detail = check.fn(seed)
        except Exception as exc:  # a crash is a failure with the reason
            ok, detail = False, f"exception: {exc}"
        results.append({
            "name": check.name,
            "suite": check.suite,
            "identity": check.identity,
            "passed": bool(ok),
            "detail": str(detail),
        })
    return results


def suites():
    return sorted({c.suite for c in CHECKS})

"""Isotropic subspaces, the spinor map and its inverse, the quadric, cell
moves, transversality, and the quadratic dictionary between spinor and
Pluecker coordinates.

A spinor is stored in the eight z-coordinates of the lattice S+.  The same
data can be viewed as an element of the even exterior algebra of W through
the fixed dictionary

    (z_1..z_8) = (c_0, c_12, c_13, c_14, c_1234, -c_34, c_24, -c_23),

where c_I is the coefficient of e_I.  The two sign flips are the single
point where sign conventions enter: they are chosen so that the quadric is
z_1 z_5 + z_2 z_6 + z_3 z_7 + z_4 z_8 = 0, which is exactly the statement
that the top coefficient of a decomposable even form equals the Pfaffian
identity c_0 c_1234 - c_12 c_34 + c_13 c_24 - c_14 c_23 = 0.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product

from .clifford import CV, exp_nilpotent, sigma_action, twisted_conjugation
from .lattices import make_Splus, make_V
from .linalg import inverse, mat, mat_mul, rank, solve
from .multivector import (DEGREE4_MASKS, Multivector, check_alternating,
                          omega_of, pfaffian, pluecker, wedge)
from .scalars import rat

# z-coordinate index -> (bitmask of e_I, sign), see module docstring
Z_DICT = ((0, 1), (0b0011, 1), (0b0101, 1), (0b1001, 1),
          (0b1111, 1), (0b1100, -1), (0b1010, 1), (0b0110, -1))

#: even masks of the exterior algebra of W, in (degree, mask) order
EVEN_MASKS = (0, 3, 5, 6, 9, 10, 12, 15)
ODD_MASKS = (1, 2, 4, 8, 7, 11, 13, 14)


@lru_cache(maxsize=1)
def splus_lattice():
    return make_Splus()


class Spinor:
    """Element of S+ (possibly with extended scalars) in z-coordinates."""

    __slots__ = ("z",)

    def __init__(self, z):
        z = list(z)
        if len(z) != 8:
            raise ValueError("a spinor has eight z-coordinates")
        self.z = [rat(c) if isinstance(c, (int, str, Fraction)) else c
                  for c in z]

    @classmethod
    def from_multivector(cls, mv: Multivector):
        if mv.n != 4 or any(m not in EVEN_MASKS for m in mv.terms):
            raise ValueError("spinors come from the even algebra of W")
        return cls([sign * mv.coefficient(mask) for mask, sign in Z_DICT])

    def multivector(self) -> Multivector:
        terms = {}
        for (mask, sign), c in zip(Z_DICT, self.z):
            if c != 0:
                terms[mask] = sign * c
        return Multivector(4, terms)

    def pair(self, other: "Spinor"):
        return splus_lattice().pair(self.z, other.z)

    def is_isotropic(self) -> bool:
        return self.pair(self) == 0

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.z)

    def scale(self, c):
        return Spinor([c * x for x in self.z])

    def __add__(self, other):
        return Spinor([a + b for a, b in zip(self.z, other.z)])

    def __sub__(self, other):
        return Spinor([a - b for a, b in zip(self.z, other.z)])

    def __eq__(self, other):
        return isinstance(other, Spinor) and all(
            a == b for a, b in zip(self.z, other.z))

    def __hash__(self):
        return hash(tuple(self.z))

    def __repr__(self):
        return f"Spinor({self.z})"


@dataclass(frozen=True)
class IsotropicSubspace:
    """Maximal isotropic subspace of V spanned by the columns of an 8x4
    matrix, together with its connected-component parity."""
    basis: list
    parity: int

    @property
    def is_even(self):
        return self.parity == 0


def spinor_map(b) -> Spinor:
    """Spinor coordinates of the isotropic subspace Z_B, B alternating.

    Returns the exterior exponential of omega_B = sum b_ij e_i ^ e_j, whose
    e_I coefficients are the Pfaffians of the principal submatrices B_I, as
    a point of the quadric in z-coordinates.
    """
    check_alternating(b)
    if len(b) != 4:
        raise ValueError("the geometry layer fixes n = 4")
    omega = omega_of(b)
    acc = Multivector.one(4)
    power = Multivector.one(4)
    k = 1
    while True:
        power = wedge(power, omega)
        if power.is_zero():
            break
        acc = acc + power.scale(Fraction(1, _factorial(k)))
        k += 1
    return Spinor.from_multivector(acc)


def _factorial(k):
    out = 1
    for i in range(2, k + 1):
        out *= i
    return out


def spinor_inverse(s: Spinor):
    """The alternating matrix B with spinor_map(B) proportional to s.

    Needs an isotropic s with z_1 != 0 (the open cell); after scaling z_1
    to 1 the entries are read off and the z_5 coordinate is checked against
    the Pfaffian of the reconstructed matrix.
    """
    if not s.is_isotropic():
        raise ValueError("spinor is not isotropic")
    z = s.z
    if z[0] == 0:
        raise ValueError("z_1 = 0: outside the open cell, apply move_to_cell")
    w = [c / z[0] for c in z]
    b12, b13, b14 = w[1], w[2], w[3]
    b34, b24, b23 = -w[5], w[6], -w[7]
    zero = w[0] - w[0]
    b = [[zero, b12, b13, b14],
         [-b12, zero, b23, b24],
         [-b13, -b23, zero, b34],
         [-b14, -b24, -b34, zero]]
    if pfaffian(b) != w[4]:
        raise ValueError("z_5 does not equal the Pfaffian: corrupted spinor")
    return b


def _zfamily_exponent_candidates():
    # deterministic schedule: identity, single pairs, then denser patterns
    pairs = list(combinations(range(4), 2))
    yield dict()
    for p in pairs:
        for c in (1, -1):
            yield {p: c}
    for pattern in product((0, 1, -1), repeat=6):
        if sum(1 for c in pattern if c) < 2:
            continue
        yield {p: c for p, c in zip(pairs, pattern) if c}


def move_to_cell(s: Spinor):
    """A spin-group element g with (g s)_1 != 0, for isotropic s != 0.

    g is an exponential of contraction-pair generators e_{i+4} e_{j+4},
    which are nilpotent, so g and its SO(V) matrix are exact.  Returns
    (g, matrix of g on V, g s).  The schedule is finite; exhausting it is
    impossible for a nonzero isotropic spinor and signals a bug.
    """
    if s.is_zero():
        raise ValueError("spinor must be nonzero")
    if not s.is_isotropic():
        raise ValueError("spinor is not isotropic")
    alg = CV()
    for coeffs in _zfamily_exponent_candidates():
        x = alg.zero()
        for (i, j), c in coeffs.items():
            x = x + (alg.generator(i + 4) * alg.generator(j + 4)).scale(rat(c))
        g = exp_nilpotent(x)
        moved = Spinor.from_multivector(sigma_action(g, s.multivector()))
        if moved.z[0] != 0:
            return g, twisted_conjugation(g), moved
    raise RuntimeError("cell-move schedule exhausted: impossible for "
                       "nonzero isotropic input")


def _intersection_dim_with_wstar(basis8x4):
    cols = [[basis8x4[i][j] for i in range(8)] for j in range(4)]
    for k in range(4, 8):
        unit = [Fraction(0)] * 8
        unit[k] = Fraction(1)
        cols.append(unit)
    return 8 - rank(mat([[c[i] for c in cols] for i in range(8)]))


def graph_basis(b):
    """The 8x4 matrix (B over I) whose columns span Z_B."""
    return [[b[i][j] for j in range(4)] for i in range(4)] + [
        [Fraction(1) if i == j else Fraction(0) for j in range(4)]
        for i in range(4)]


def subspace_of_spinor(s: Spinor) -> IsotropicSubspace:
    """The maximal isotropic subspace attached to an isotropic spinor."""
    _, gmat, moved = move_to_cell(s)
    basis_moved = graph_basis(spinor_inverse(moved))
    basis = mat_mul(inverse(gmat), basis_moved)
    _validate_isotropic(basis)
    parity = _intersection_dim_with_wstar(basis) % 2
    if parity != 0:
        raise RuntimeError("spinor produced an odd-component subspace")
    return IsotropicSubspace(basis=basis, parity=parity)


def _validate_isotropic(basis8x4):
    g = make_V().gram
    for a in range(4):
        for b in range(4):
            val = 0
            for i in range(8):
                if basis8x4[i][a] == 0:
                    continue
                for j in range(8):
                    if g[i][j] != 0:
                        val = val + basis8x4[i][a] * g[i][j] * basis8x4[j][b]
            if val != 0:
                raise ValueError("subspace is not isotropic")
    if rank(mat(basis8x4)) != 4:
        raise ValueError("subspace basis is rank deficient")


def transversality(s1: Spinor, s2: Spinor, cross_validate=True) -> bool:
    """Whether the subspaces of two isotropic spinors meet only in 0.

    Decided by (s1, s2) != 0 on S+; when cross_validate is set the answer
    is confirmed against the rank of the concatenated 8x8 basis matrix.
    """
    if not (s1.is_isotropic() and s2.is_isotropic()):
        raise ValueError("both spinors must be isotropic")
    if _proportional(s1.z, s2.z):
        raise ValueError("spinors are proportional")
    answer = s1.pair(s2) != 0
    if cross_validate:
        z1 = subspace_of_spinor(s1)
        z2 = subspace_of_spinor(s2)
        joint = [z1.basis[i] + z2.basis[i] for i in range(8)]
        if (rank(mat(joint)) == 8) != answer:
            raise RuntimeError("form criterion disagrees with rank "
                               "criterion: conventions corrupted")
    return answer


def _proportional(u, v):
    for a, b in zip(u, v):
        if a != 0:
            return all(a * y == b * x for x, y in zip(u, v))
    return all(x == 0 for x in u)


def sym2_monomials(z):
    """The 36 monomials z_a z_b (a <= b, lexicographic) of a coordinate 8-tuple."""
    return [z[a] * z[b] for a, b in combinations_with_replacement_8()]


@lru_cache(maxsize=1)
def combinations_with_replacement_8():
    return tuple((a, b) for a in range(8) for b in range(a, 8))


def _sample_spinor_and_minors(rng):
    b = random_alternating(rng)
    z = spinor_map(b).z
    minors = pluecker(graph_basis(b))
    return z, [minors.coefficient(m) for m in DEGREE4_MASKS]


@lru_cache(maxsize=1)
def veronese_dictionary():
    """The 70 x 36 matrix expressing maximal minors of (B over I) as fixed
    quadratic forms in the spinor coordinates of the image of B.

    Computed once by exact interpolation over sampled quadric points.  The
    monomial vectors span only 35 of the 36 dimensions (the quadric itself
    is the one relation), so a particular solution is taken; any two
    solutions agree on every quadric point.
    """
    rng = random.Random(271828)
    xs, ys = [], []
    while len(xs) < 48:
        z, minors = _sample_spinor_and_minors(rng)
        xs.append(sym2_monomials(z))
        ys.append(minors)
    a = mat(xs)
    if rank(a) != 35:
        raise RuntimeError("interpolation rank deficiency: sampling bug")
    rows = []
    for r in range(70):
        sol = solve(a, [y[r] for y in ys])
        if sol is None:
            raise RuntimeError("minors are not quadratic in spinor "
                               "coordinates: interpolation bug")
        rows.append(sol)
    return rows


def veronese_pluecker_check(b) -> bool:
    """Confirm that every maximal minor of (B over I) equals the cached
    quadratic form evaluated at the spinor coordinates of B's image."""
    check_alternating(b)
    dictionary = veronese_dictionary()
    z = spinor_map(b).z
    mono = sym2_monomials(z)
    minors = pluecker(graph_basis(b))
    got = [minors.coefficient(m) for m in DEGREE4_MASKS]
    for r in range(70):
        if sum(c * x for c, x in zip(dictionary[r], mono)) != got[r]:
            return False
    return True


def random_alternating(rng, lo=-3, hi=3, size=4):
    """A random alternating matrix with integer entries in [lo, hi]."""
    b = [[Fraction(0)] * size for _ in range(size)]
    for i in range(size):
        for j in range(i + 1, size):
            v = Fraction(rng.randint(lo, hi))
            b[i][j] = v
            b[j][i] = -v
    return b


def random_isotropic_spinor(rng) -> Spinor:
    """A random point of the quadric cone, spread across both cells."""
    s = spinor_map(random_alternating(rng))
    scalar = Fraction(rng.randint(1, 5))
    s = s.scale(scalar)
    if rng.random() < 0.5:
        # swap the roles of the two cells: z_1 <-> z_5 etc. preserves the
        # quadric (it is the signed permutation induced by e_i <-> e_{i+4})
        z = s.z
        s = Spinor([z[4], z[6], z[5], z[7], z[0], z[2], z[1], z[3]])
    return s

"""Clifford algebras over a bilinear lattice, the spin module on the
exterior algebra of W, twisted conjugation onto SO(V), exact exponentials of
nilpotent elements, and the Lie algebra isomorphism spin <-> so.

The defining relation is v w + w v = (v, w), equivalently v^2 = (v, v)/2,
so the generators of the rank-8 lattice V satisfy e_i e_{i+4} + e_{i+4} e_i
= 1 and all e_i square to zero.  Products are reduced to the canonical
basis {e_{i_1} ... e_{i_k} : i_1 < ... < i_k} indexed by bitmasks.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .lattices import BilinearLattice, make_V
from .linalg import mat, solve
from .multivector import Multivector, contract, indices_of, popcount, wedge
from .scalars import rat


class CliffordAlgebra:
    """The Clifford algebra C(L) of a bilinear lattice, dimension 2^rank."""

    def __init__(self, lattice: BilinearLattice):
        self.lattice = lattice
        self.rank = lattice.rank
        self.gram = lattice.gram
        self._gen_cache = {}
        self._blade_cache = {}
        self._conj_cache = {}

    # -- basis blade reduction ------------------------------------------

    def _blade_times_gen(self, mask, k):
        """Reduce e_mask * e_k to the canonical basis, as {mask: coeff}."""
        key = (mask, k)
        hit = self._gen_cache.get(key)
        if hit is not None:
            return hit
        if mask == 0:
            out = {1 << k: Fraction(1)}
        else:
            j = mask.bit_length() - 1
            if j < k:
                out = {mask | (1 << k): Fraction(1)}
            elif j == k:
                c = self.gram[k][k] / 2
                out = {mask ^ (1 << k): c} if c != 0 else {}
            else:
                # e_rest e_j e_k = -(e_rest e_k) e_j + (e_j, e_k) e_rest
                out = {}
                for m2, c in self._blade_times_gen(mask ^ (1 << j), k).items():
                    out[m2 | (1 << j)] = out.get(m2 | (1 << j), 0) - c
                g = self.gram[j][k]
                if g != 0:
                    m2 = mask ^ (1 << j)
                    v = out.get(m2, 0) + g
                    if v == 0:
                        out.pop(m2, None)
                    else:
                        out[m2] = v
        self._gen_cache[key] = out
        return out

    def blade_product(self, ma, mb):
        key = (ma, mb)
        hit = self._blade_cache.get(key)
        if hit is not None:
            return hit
        acc = {ma: Fraction(1)}
        m = mb
        while m:
            low = m & -m
            k = low.bit_length() - 1
            nxt = {}
            for mask, c in acc.items():
                for m2, c2 in self._blade_times_gen(mask, k).items():
                    v = nxt.get(m2, 0) + c * c2
                    if v == 0:
                        nxt.pop(m2, None)
                    else:
                        nxt[m2] = v
            acc = nxt
            m ^= low
        self._blade_cache[key] = acc
        return acc

    def blade_conj(self, mask):
        """Conjugate of a canonical blade: (-1)^r times the reversed product."""
        hit = self._conj_cache.get(mask)
        if hit is not None:
            return hit
        prod = {0: Fraction(1)}
        for k in reversed(indices_of(mask)):
            nxt = {}
            for m, c in prod.items():
                for m2, c2 in self._blade_times_gen(m, k).items():
                    v = nxt.get(m2, 0) + c * c2
                    if v == 0:
                        nxt.pop(m2, None)
                    else:
                        nxt[m2] = v
            prod = nxt
        if popcount(mask) % 2:
            prod = {m: -c for m, c in prod.items()}
        self._conj_cache[mask] = prod
        return prod

    # -- element constructors -------------------------------------------

    def element(self, terms):
        return CliffordElement(self, terms)

    def zero(self):
        return CliffordElement(self, {})

    def one(self):
        return CliffordElement(self, {0: Fraction(1)})

    def scalar(self, c):
        return CliffordElement(self, {0: c})

    def generator(self, i):
        return CliffordElement(self, {1 << i: Fraction(1)})

    def vector(self, coords):
        return CliffordElement(self, {1 << i: c for i, c in enumerate(coords)
                                      if c != 0})

    def basis_masks(self, even_only=False):
        masks = range(1 << self.rank)
        if even_only:
            return [m for m in masks if popcount(m) % 2 == 0]
        return list(masks)


class CliffordElement:
    """Finite mapping {generator-subset bitmask: scalar} in a fixed C(L)."""

    __slots__ = ("algebra", "terms")

    def __init__(self, algebra, terms=None):
        self.algebra = algebra
        clean = {}
        if terms:
            for m, c in terms.items():
                c = rat(c) if isinstance(c, (int, str, Fraction)) else c
                if c != 0:
                    clean[m] = c
        self.terms = clean

    def _check(self, other):
        if not isinstance(other, CliffordElement) or other.algebra is not self.algebra:
            raise ValueError("elements of different Clifford algebras")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(rat(other))
        self._check(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v == 0:
                out.pop(m, None)
            else:
                out[m] = v
        return CliffordElement(self.algebra, out)

    __radd__ = __add__

    def __neg__(self):
        return CliffordElement(self.algebra,
                               {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(rat(other))
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c):
        if c == 0:
            return self.algebra.zero()
        return CliffordElement(self.algebra,
                               {m: c * x for m, x in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(rat(other))
        self._check(other)
        alg = self.algebra
        out = {}
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                cc = ca * cb
                for m, c in alg.blade_product(ma, mb).items():
                    v = out.get(m, 0) + cc * c
                    if v == 0:
                        out.pop(m, None)
                    else:
                        out[m] = v
        return CliffordElement(alg, out)

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(rat(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = self.algebra.scalar(rat(other))
        return (isinstance(other, CliffordElement)
                and other.algebra is self.algebra and other.terms == self.terms)

    def __hash__(self):
        return hash(tuple(sorted(self.terms.items(), key=lambda t: t[0])))

    def is_zero(self):
        return not self.terms

    def is_even(self):
        return all(popcount(m) % 2 == 0 for m in self.terms)

    def degrees(self):
        return sorted({popcount(m) for m in self.terms})

    def scalar_part(self):
        return self.terms.get(0, Fraction(0))

    def vector_part(self):
        """Coordinates of the degree-1 component."""
        return [self.terms.get(1 << i, Fraction(0))
                for i in range(self.algebra.rank)]

    def is_vector(self):
        return all(popcount(m) == 1 for m in self.terms)

    def conj(self):
        """The anti-involution x_1...x_r -> (-1)^r x_r...x_1."""
        alg = self.algebra
        out = {}
        for mask, c in self.terms.items():
            for m, c2 in alg.blade_conj(mask).items():
                v = out.get(m, 0) + c * c2
                if v == 0:
                    out.pop(m, None)
                else:
                    out[m] = v
        return CliffordElement(alg, out)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for m in sorted(self.terms, key=lambda t: (popcount(t), t)):
            lab = "1" if m == 0 else "e" + "".join(str(i + 1)
                                                   for i in indices_of(m))
            parts.append(f"{self.terms[m]}*{lab}")
        return " + ".join(parts)


def conjugation(x: CliffordElement) -> CliffordElement:
    return x.conj()


def commutator(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    return x * y - y * x


@lru_cache(maxsize=1)
def CV() -> CliffordAlgebra:
    """The Clifford algebra of V (rank 8, dimension 256)."""
    return CliffordAlgebra(make_V())


# ---------------------------------------------------------------------------
# the spin module S = exterior algebra of W

def _gen_action(k: int, eta: Multivector) -> Multivector:
    # generators of W act by left wedge, generators of W* by contraction
    if k < 4:
        return wedge(Multivector.basis_vector(4, k), eta)
    unit = [0] * 4
    unit[k - 4] = 1
    return contract(unit, eta)


def sigma_action(x: CliffordElement, eta: Multivector) -> Multivector:
    """The C(V)-module structure on the exterior algebra of W.

    A blade e_{i_1}...e_{i_r} acts as the composite of the generator
    actions, rightmost factor first; W acts by wedging, W* by contracting.
    Even elements preserve the even/odd split.
    """
    if x.algebra.rank != 8:
        raise ValueError("sigma_action needs an element of C(V)")
    if eta.n != 4:
        raise ValueError("sigma_action acts on the exterior algebra of W")
    out = Multivector.zero(4)
    for mask, c in x.terms.items():
        cur = eta
        for k in reversed(indices_of(mask)):
            cur = _gen_action(k, cur)
            if cur.is_zero():
                break
        if not cur.is_zero():
            out = out + cur.scale(c)
    return out


def is_spin_group_element(x: CliffordElement) -> bool:
    """Check x x* = 1, evenness, and stability of V under conjugation."""
    if not x.is_even():
        return False
    if x * x.conj() != x.algebra.one():
        return False
    xc = x.conj()
    for i in range(x.algebra.rank):
        if not (x * x.algebra.generator(i) * xc).is_vector():
            return False
    return True


def twisted_conjugation(x: CliffordElement):
    """The SO(V) matrix of v -> x v x* for x in the spin group.

    Both spin-group conditions (x x* = 1 and x V x* inside V) are verified
    before the matrix is assembled; invalid inputs raise ValueError.
    """
    alg = x.algebra
    if not x.is_even() or x * x.conj() != alg.one():
        raise ValueError("element does not satisfy x x* = 1 in C(L)+")
    xc = x.conj()
    cols = []
    for j in range(alg.rank):
        img = x * alg.generator(j) * xc
        if not img.is_vector():
            raise ValueError("conjugation by x does not preserve V")
        cols.append(img.vector_part())
    return [[cols[j][i] for j in range(alg.rank)] for i in range(alg.rank)]


def exp_nilpotent(x: CliffordElement) -> CliffordElement:
    """Finite exponential sum x^k / k! of a nilpotent Clifford element.

    The power chain is capped at 2^rank terms; a chain that fails to
    terminate by then is not nilpotent and raises ValueError.
    """
    alg = x.algebra
    acc = alg.one()
    power = alg.one()
    cap = 1 << alg.rank
    for k in range(1, cap + 1):
        power = power * x
        if power.is_zero():
            return acc
        acc = acc + power.scale(Fraction(1, factorial(k)))
    raise ValueError("power chain did not terminate: element is not nilpotent")


# ---------------------------------------------------------------------------
# the Lie algebra spin(L) and its matrix picture so(L)

def spin_pairs(n):
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def spin_basis(algebra: CliffordAlgebra):
    """Basis e_i e_j - (e_i, e_j)/2 (i < j) of spin(L), n(n-1)/2 elements."""
    out = []
    for i, j in spin_pairs(algebra.rank):
        x = algebra.generator(i) * algebra.generator(j)
        g = algebra.gram[i][j]
        if g != 0:
            x = x - algebra.scalar(g / 2)
        out.append(x)
    return out


def is_spin_lie_element(x: CliffordElement) -> bool:
    """Membership test: even, x + x* = 0 and [x, V] inside V."""
    if not x.is_even():
        return False
    if not (x + x.conj()).is_zero():
        return False
    for i in range(x.algebra.rank):
        if not commutator(x, x.algebra.generator(i)).is_vector():
            return False
    return True


def spin_so_iso(x: CliffordElement):
    """Matrix of v -> x v - v x on L; the Lie isomorphism spin(L) -> so(L)."""
    if not is_spin_lie_element(x):
        raise ValueError("element fails the spin Lie algebra membership test")
    n = x.algebra.rank
    cols = [commutator(x, x.algebra.generator(j)).vector_part()
            for j in range(n)]
    return [[cols[j][i] for j in range(n)] for i in range(n)]


def is_so_matrix(m, gram) -> bool:
    """Whether m satisfies (m v, w) + (v, m w) = 0, i.e. m^T G + G m = 0."""
    n = len(m)
    for a in range(n):
        for b in range(n):
            s = sum(m[i][a] * gram[i][b] + gram[a][i] * m[i][b]
                    for i in range(n))
            if s != 0:
                return False
    return True


def so_to_spin(algebra: CliffordAlgebra, m) -> CliffordElement:
    """Inverse of spin_so_iso: lift a matrix in so(L) into spin(L) in C(L).

    Solves for the coefficients on the basis e_i e_j - (e_i, e_j)/2, which
    reinstates the scalar shifts that the commutator action forgets.
    """
    if not is_so_matrix(m, algebra.gram):
        raise ValueError("matrix is not in so(L) for the lattice Gram")
    basis = spin_basis(algebra)
    n = algebra.rank
    cols = []
    for b in basis:
        mb = spin_so_iso(b)
        cols.append([mb[i][j] for i in range(n) for j in range(n)])
    rhs = [m[i][j] for i in range(n) for j in range(n)]
    coeffs = solve(mat([[cols[c][r] for c in range(len(cols))]
                        for r in range(n * n)]), rhs)
    if coeffs is None:
        raise ValueError("matrix is outside the image of spin(L)")
    out = algebra.zero()
    for c, b in zip(coeffs, basis):
        if c != 0:
            out = out + b.scale(c)
    return out


# -- the explicit so(8) dictionary for V ------------------------------------

def _matrix_unit(n, i, j):
    m = [[Fraction(0)] * n for _ in range(n)]
    m[i][j] = Fraction(1)
    return m


def _madd(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def _mneg(a):
    return [[-x for x in row] for row in a]


def spin_v_xyz_table():
    """The 28 spin(V) basis elements and their so(8) matrices.

    Families (n = 4, indices 1-based in the labels):
      X_{i,j} = e_i e_{j+4} - delta_ij/2  ->  E_{i,j} - E_{4+j,4+i}
      Y_{i,j} = e_i e_j (i < j)           ->  E_{i,4+j} - E_{j,4+i}
      Z_{i,j} = e_{i+4} e_{j+4} (i < j)   ->  E_{4+i,j} - E_{4+j,i}
    Returns a list of (label, clifford element, expected matrix).
    """
    alg = CV()
    out = []
    for i in range(4):
        for j in range(4):
            x = alg.generator(i) * alg.generator(j + 4)
            if i == j:
                x = x - alg.scalar(Fraction(1, 2))
            mx = _madd(_matrix_unit(8, i, j),
                       _mneg(_matrix_unit(8, 4 + j, 4 + i)))
            out.append((f"X{i + 1}{j + 1}", x, mx))
    for i in range(4):
        for j in range(i + 1, 4):
            y = alg.generator(i) * alg.generator(j)
            my = _madd(_matrix_unit(8, i, 4 + j),
                       _mneg(_matrix_unit(8, j, 4 + i)))
            out.append((f"Y{i + 1}{j + 1}", y, my))
    for i in range(4):
        for j in range(i + 1, 4):
            z = alg.generator(i + 4) * alg.generator(j + 4)
            mz = _madd(_matrix_unit(8, 4 + i, j),
                       _mneg(_matrix_unit(8, 4 + j, i)))
            out.append((f"Z{i + 1}{j + 1}", z, mz))
    return out


def cartan_elements():
    """H_i = e_i e_{i+4} - 1/2 (i = 1..4), the Cartan basis of spin(V)."""
    alg = CV()
    return [alg.generator(i) * alg.generator(i + 4) - alg.scalar(Fraction(1, 2))
            for i in range(4)]


def random_spin_group_element(rng, span=1):
    """A random element of the spin group of V, exactly.

    Built as a product of exponentials of the two nilpotent degree-2
    families (W-pairs and W*-pairs); sums across the families are not
    nilpotent, so exactness forces the product form.
    """
    alg = CV()
    g = alg.one()
    for family in (0, 4, 0):
        x = alg.zero()
        for i in range(4):
            for j in range(i + 1, 4):
                c = rng.randint(-span, span)
                if c:
                    x = x + (alg.generator(i + family) *
                             alg.generator(j + family)).scale(Fraction(c))
        g = g * exp_nilpotent(x)
    return g


def spin_v_dimension_check():
    """Rank of the 28 basis elements acting on V; equals n(2n-1) = 28."""
    from .linalg import rank as mat_rank
    rows = []
    for _, x, _ in spin_v_xyz_table():
        mx = spin_so_iso(x)
        rows.append([mx[i][j] for i in range(8) for j in range(8)])
    return mat_rank(mat(rows)), len(rows)

"""Exact 4x4 symplectic matrices, paramodular membership and the action on Siegel space."""

from fractions import Fraction

from paramodring.core.complexq import ComplexRational
from paramodring.errors import SingularBlock

Block = tuple[tuple[object, object], tuple[object, object]]


class Mat4:
    __slots__ = ("rows",)

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(rows) != 4 or any(len(r) != 4 for r in rows):
            raise ValueError("Mat4 needs four rows of four entries")
        self.rows = rows

    @classmethod
    def identity(cls) -> "Mat4":
        return cls([[int(i == j) for j in range(4)] for i in range(4)])

    @classmethod
    def from_blocks(cls, A, B, C, D) -> "Mat4":
        return cls([
            [A[0][0], A[0][1], B[0][0], B[0][1]],
            [A[1][0], A[1][1], B[1][0], B[1][1]],
            [C[0][0], C[0][1], D[0][0], D[0][1]],
            [C[1][0], C[1][1], D[1][0], D[1][1]],
        ])

    def blocks(self) -> tuple[Block, Block, Block, Block]:
        r = self.rows

        def block(i, j):
            return ((r[i][j], r[i][j + 1]), (r[i + 1][j], r[i + 1][j + 1]))

        return block(0, 0), block(0, 2), block(2, 0), block(2, 2)

    def transpose(self) -> "Mat4":
        return Mat4([[self.rows[j][i] for j in range(4)] for i in range(4)])

    def __matmul__(self, other: "Mat4") -> "Mat4":
        return Mat4([
            [sum(self.rows[i][k] * other.rows[k][j] for k in range(4)) for j in range(4)]
            for i in range(4)
        ])

    __mul__ = __matmul__

    def __eq__(self, other):
        if not isinstance(other, Mat4):
            return NotImplemented
        return self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return "Mat4(" + "; ".join(" ".join(str(x) for x in row) for row in self.rows) + ")"


J = Mat4([[0, 0, 1, 0], [0, 0, 0, 1], [-1, 0, 0, 0], [0, -1, 0, 0]])


def is_symplectic(M: Mat4) -> bool:
    return M.transpose() @ J @ M == J


def in_paramodular(M: Mat4, N: int) -> bool:
    """Symplectic with sigma_N^-1 M sigma_N integral, sigma_N = diag(1, 1, 1, N)."""
    if not is_symplectic(M):
        return False
    sigma = (1, 1, 1, N)
    return all(
        (M.rows[i][j] * sigma[j] / sigma[i]).denominator == 1 for i in range(4) for j in range(4)
    )


def translation(b1, b2, b3) -> Mat4:
    """T_b: Z -> Z + [[b1, b2], [b2, b3]]."""
    return Mat4.from_blocks(((1, 0), (0, 1)), ((b1, b2), (b2, b3)), ((0, 0), (0, 0)), ((1, 0), (0, 1)))


def conjugation(u) -> Mat4:
    """R_u: Z -> u Z u^T, blocks diag(u, u^-T)."""
    (a, b), (c, d) = u
    det = Fraction(a * d - b * c)
    if det == 0:
        raise SingularBlock(f"conjugation by a singular matrix {u}")
    inv_t = ((d / det, -c / det), (-b / det, a / det))
    return Mat4.from_blocks(u, ((0, 0), (0, 0)), ((0, 0), (0, 0)), inv_t)


# --- 2x2 matrices over an exact commutative ring ---

def mat2_mul(X: Block, Y: Block) -> Block:
    return (
        (X[0][0] * Y[0][0] + X[0][1] * Y[1][0], X[0][0] * Y[0][1] + X[0][1] * Y[1][1]),
        (X[1][0] * Y[0][0] + X[1][1] * Y[1][0], X[1][0] * Y[0][1] + X[1][1] * Y[1][1]),
    )


def mat2_add(X: Block, Y: Block) -> Block:
    return tuple(tuple(X[i][j] + Y[i][j] for j in range(2)) for i in range(2))


def mat2_inverse(X: Block) -> Block:
    det = X[0][0] * X[1][1] - X[0][1] * X[1][0]
    if det == 0:
        raise SingularBlock(f"block {X} is not invertible")
    inv = ComplexRational(1) / det if isinstance(det, ComplexRational) else 1 / det
    return ((X[1][1] * inv, -X[0][1] * inv), (-X[1][0] * inv, X[0][0] * inv))


def _cx(x) -> ComplexRational:
    return x if isinstance(x, ComplexRational) else ComplexRational(x, 0)


class HalfSpacePoint:
    """Symmetric [[tau, z], [z, w]] with positive definite imaginary part."""

    __slots__ = ("tau", "z", "w")

    def __init__(self, tau, z, w):
        self.tau, self.z, self.w = _cx(tau), _cx(z), _cx(w)
        y1, y12, y2 = self.tau.im, self.z.im, self.w.im
        if not (y1 > 0 and y1 * y2 - y12 * y12 > 0):
            raise ValueError(f"{self} is not in the Siegel upper half-space")

    @classmethod
    def from_matrix(cls, Z: Block) -> "HalfSpacePoint":
        if _cx(Z[0][1]) != _cx(Z[1][0]):
            raise ValueError(f"matrix {Z} is not symmetric")
        return cls(Z[0][0], Z[0][1], Z[1][1])

    def matrix(self) -> Block:
        return ((self.tau, self.z), (self.z, self.w))

    def __eq__(self, other):
        if not isinstance(other, HalfSpacePoint):
            return NotImplemented
        return (self.tau, self.z, self.w) == (other.tau, other.z, other.w)

    __hash__ = None

    def __repr__(self):
        return f"HalfSpacePoint(tau={self.tau}, z={self.z}, w={self.w})"


def moebius_act(M: Mat4, Z: HalfSpacePoint) -> HalfSpacePoint:
    """(A Z + B)(C Z + D)^-1."""
    A, B, C, D = M.blocks()
    zm = Z.matrix()
    num = mat2_add(mat2_mul(A, zm), B)
    den = mat2_add(mat2_mul(C, zm), D)
    return HalfSpacePoint.from_matrix(mat2_mul(num, mat2_inverse(den)))


def moebius_1(m, t: ComplexRational) -> ComplexRational:
    """Action of a 2x2 matrix on the upper half-plane."""
    (a, b), (c, d) = m
    den = c * t + d
    if _cx(den).is_zero():
        raise SingularBlock(f"c*tau + d vanishes for {m} at {t}")
    return _cx(a * t + b) / den


def fricke_point(Z: HalfSpacePoint, N: int) -> HalfSpacePoint:
    """V_N as a point map: (tau, z, w) -> (N w, -z, tau / N)."""
    return HalfSpacePoint(Z.w * N, -Z.z, Z.tau * Fraction(1, N))

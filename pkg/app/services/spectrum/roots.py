"""
Giải nghiệm đa thức bậc 2, 3: exact (rational-root method) và float (closed form).
"""

import math
from fractions import Fraction
from typing import List, Optional

import numpy as np
from sympy import divisors

from app.core.exceptions import ComplexSpectrumException, IrrationalSpectrumException

# Số bước Newton nguyên tối đa khi tinh chỉnh một ứng viên
NEWTON_MAX_STEPS = 200


# ************* Exact ************* #


def integer_coefficients(coeffs: List[Fraction]) -> List[int]:
    """Nhân với lcm mẫu số để được hệ số nguyên (thứ tự hằng số trước)."""
    lcm = math.lcm(*(c.denominator for c in coeffs))
    ints = [int(c * lcm) for c in coeffs]
    g = math.gcd(*ints)
    return [x // g for x in ints] if g > 1 else ints


def horner(coeffs: List[Fraction], x: Fraction) -> Fraction:
    result = Fraction(0)
    for c in reversed(coeffs):
        result = result * x + c
    return result


def root_estimates(ints: List[int]) -> List[float]:
    """Phần thực của mọi nghiệm xấp xỉ (numpy.roots); nghiệm hữu tỉ luôn nằm gần một trong số đó."""
    estimates = np.roots([float(c) for c in reversed(ints)])
    return sorted({float(r.real) for r in estimates if math.isfinite(r.real)})


def _scaled_integer_root(ints: List[int], q: int, estimate: float) -> Optional[int]:
    """
    Nghiệm nguyên p của P_q(y) = sum c_k y^k q^(n-k) gần q * estimate, tức p/q là nghiệm của đa thức gốc.

    Newton trên số nguyên tinh chỉnh ứng viên khi float không đủ chính xác (nghiệm rất lớn, nghiệm bội).
    """
    n = len(ints) - 1
    scaled = [c * q ** (n - k) for k, c in enumerate(ints)]
    derivative = [k * c for k, c in enumerate(scaled)][1:]

    def value(coeffs: List[int], y: int) -> int:
        result = 0
        for c in reversed(coeffs):
            result = result * y + c
        return result

    y = round(q * estimate)
    for _ in range(NEWTON_MAX_STEPS):
        slope = value(derivative, y)
        if slope == 0:
            break
        step = value(scaled, y) // slope
        if step == 0:
            break
        y -= step
    for candidate in (y, y - 1, y + 1, y - 2, y + 2):
        if value(scaled, candidate) == 0:
            return candidate
    return None


def find_rational_root(coeffs: List[Fraction]) -> Optional[Fraction]:
    """
    Một nghiệm hữu tỉ p/q (q | hệ số cao nhất), hoặc None.

    Ứng viên p lấy từ nghiệm xấp xỉ rồi được kiểm tra chính xác bằng horner,
    nên không cần liệt kê ước của hệ số tự do.
    """
    ints = integer_coefficients(coeffs)
    if ints[0] == 0:
        return Fraction(0)
    estimates = root_estimates(ints)
    for q in divisors(abs(ints[-1])):
        for estimate in estimates:
            p = _scaled_integer_root(ints, q, estimate)
            if p is not None and horner(coeffs, Fraction(p, q)) == 0:
                return Fraction(p, q)
    return None


def deflate(coeffs: List[Fraction], root: Fraction) -> List[Fraction]:
    """Chia tổng hợp cho (x - root); thứ tự hằng số trước."""
    degree = len(coeffs) - 1
    quotient = [Fraction(0)] * degree
    carry = coeffs[-1]
    for k in range(degree - 1, -1, -1):
        quotient[k] = carry
        carry = coeffs[k] + carry * root
    return quotient


def rational_sqrt(value: Fraction) -> Optional[Fraction]:
    """Căn bậc hai hữu tỉ của value >= 0, hoặc None nếu vô tỉ."""
    num_root = math.isqrt(value.numerator)
    den_root = math.isqrt(value.denominator)
    if num_root * num_root == value.numerator and den_root * den_root == value.denominator:
        return Fraction(num_root, den_root)
    return None


def solve_quadratic_exact(coeffs: List[Fraction]) -> List[Fraction]:
    c0, c1, c2 = coeffs
    discriminant = c1 * c1 - 4 * c2 * c0
    if discriminant < 0:
        raise ComplexSpectrumException(
            f"Quadratic factor has negative discriminant {discriminant}"
        )
    root = rational_sqrt(discriminant)
    if root is None:
        raise IrrationalSpectrumException(
            f"Quadratic factor has irrational roots (discriminant {discriminant}); use --mode float"
        )
    return [(-c1 - root) / (2 * c2), (-c1 + root) / (2 * c2)]


def exact_roots(coeffs: List[Fraction]) -> List[Fraction]:
    """Tất cả nghiệm (kèm lặp) của đa thức bậc <= 3 với hệ số hữu tỉ."""
    remaining = list(coeffs)
    roots: List[Fraction] = []
    while len(remaining) - 1 > 2:
        root = find_rational_root(remaining)
        if root is None:
            raise IrrationalSpectrumException(
                "Cubic factor has no rational root; use --mode float"
            )
        roots.append(root)
        remaining = deflate(remaining, root)
    if len(remaining) - 1 == 2:
        roots.extend(solve_quadratic_exact(remaining))
    elif len(remaining) - 1 == 1:
        roots.append(-remaining[0] / remaining[1])
    return sorted(roots)


# ************* Float ************* #


def _cbrt(x: float) -> float:
    """Căn bậc ba giữ dấu."""
    if x >= 0:
        return x ** (1.0 / 3.0)
    return -((-x) ** (1.0 / 3.0))


def solve_quadratic_float(b: float, c: float, threshold: float) -> List[float]:
    """
    Nghiệm của x^2 + b x + c, dạng ổn định theo dấu của b.

    Raises:
        ComplexSpectrumException: Nếu discriminant âm vượt ngưỡng.
    """
    discriminant = b * b - 4.0 * c
    scale = max(1.0, b * b, abs(c))
    if discriminant < 0:
        if discriminant < -threshold * scale:
            raise ComplexSpectrumException(
                f"Quadratic factor has negative discriminant {discriminant:.6g}"
            )
        discriminant = 0.0
    sqrt_d = math.sqrt(discriminant)
    q = -0.5 * (b + math.copysign(sqrt_d, b))
    if q == 0.0:
        return [0.0, 0.0]
    return sorted([q, c / q])


def solve_cubic_float(a: float, b: float, c: float, threshold: float) -> List[float]:
    """
    Nghiệm thực của x^3 + a x^2 + b x + c.

    Đưa về dạng depressed t^3 + p t + q với x = t - a/3; ba nghiệm thực dùng dạng
    lượng giác, một nghiệm thực dùng Cardano rồi deflate về bậc hai.
    """
    a13 = a / 3.0
    p = b - a * a13
    q = a13 * (2.0 * a13 * a13 - b) + c
    scale = max(1.0, abs(a13), math.sqrt(abs(b)), abs(c) ** (1.0 / 3.0))

    if abs(p) <= threshold * scale * scale and abs(q) <= threshold * scale ** 3:
        return [-a13] * 3

    delta = 0.25 * q * q + (p / 3.0) ** 3
    if delta > threshold * scale ** 6 or p >= 0:
        sqrt_delta = math.sqrt(max(delta, 0.0))
        t = _cbrt(-0.5 * q + sqrt_delta) + _cbrt(-0.5 * q - sqrt_delta)
        root = t - a13
        # x^3 + a x^2 + b x + c = (x - root)(x^2 + (a + root) x + (b + (a + root) root))
        qb = a + root
        qc = b + qb * root
        return sorted([root] + solve_quadratic_float(qb, qc, threshold))

    m = 2.0 * math.sqrt(-p / 3.0)
    argument = (3.0 * q / (2.0 * p)) * math.sqrt(-3.0 / p)
    phi = math.acos(max(-1.0, min(1.0, argument)))
    roots = [m * math.cos(phi / 3.0 - 2.0 * math.pi * k / 3.0) - a13 for k in range(3)]
    return sorted(roots)


def cluster_roots(roots: List[float], cluster_eps: float) -> List[List[float]]:
    """Gộp các nghiệm gần nhau (khoảng cách <= cluster_eps * max(1, |nghiệm lớn nhất|))."""
    if not roots:
        return []
    ordered = sorted(roots)
    radius = cluster_eps * max(1.0, max(abs(r) for r in ordered))
    clusters = [[ordered[0]]]
    for r in ordered[1:]:
        if r - clusters[-1][-1] <= radius:
            clusters[-1].append(r)
        else:
            clusters.append([r])
    return clusters

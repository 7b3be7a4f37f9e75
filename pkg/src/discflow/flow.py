"""Numerical orbit verification on top of the exact family oracles.

Floats live only here: orbits are integrated with an adaptive embedded
Runge-Kutta 5(4) scheme with dense output, section returns are located by
sign-change detection on the dense interpolant plus bisection to 1e-12 in
time, and escape is a terminal radius crossing with outward radial speed.
The finite-equilibrium scan stays exact (Groebner elimination over the
rationals) because the global-center criterion hinges on uniqueness of the
finite equilibrium.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np
from scipy.integrate import solve_ivp

from .compactify import infinite_equilibria
from .family import FamilyParams, build_system, center_cases
from .poly import Poly2, VectorField
from .roots import real_roots

_CHUNK = 30.0
_FIRST_CHUNK = 8.0
_T_GUARD = 1e-9
_SUBDIV = 6


class StepUnderflow(RuntimeError):
    """The integrator failed (stiffness or a finite-time singularity)."""


class NotConserved(ValueError):
    """The candidate first integral has a nonzero Lie derivative."""


@dataclass(frozen=True)
class IntegratorConfig:
    rel_tol: float = 1e-10
    abs_tol: float = 1e-12
    max_time: float = 200.0
    escape_radius: float = 1e3
    section_closure_tol: float = 1e-6

    def __post_init__(self):
        for name in ("rel_tol", "abs_tol", "max_time", "escape_radius", "section_closure_tol"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")


@dataclass(frozen=True)
class OrbitVerdict:
    tag: str  # "periodic" | "escaping" | "inconclusive"
    period: float | None = None
    exit_time: float | None = None
    closure_error: float | None = None
    reason: str | None = None

    @classmethod
    def periodic(cls, period: float, closure_error: float) -> "OrbitVerdict":
        return cls("periodic", period=period, closure_error=closure_error)

    @classmethod
    def escaping(cls, exit_time: float) -> "OrbitVerdict":
        return cls("escaping", exit_time=exit_time)

    @classmethod
    def inconclusive(cls, reason: str) -> "OrbitVerdict":
        return cls("inconclusive", reason=reason)

    def to_json(self) -> dict:
        out: dict = {"tag": self.tag}
        if self.period is not None:
            out["period"] = self.period
        if self.exit_time is not None:
            out["exit_time"] = self.exit_time
        if self.closure_error is not None:
            out["closure_error"] = self.closure_error
        if self.reason is not None:
            out["reason"] = self.reason
        return out


def _poly_expr(p: Poly2) -> str:
    if p.is_zero:
        return "0.0"
    parts = []
    for (i, j), c in sorted(p.terms.items()):
        factors = [repr(float(c))]
        if i:
            factors.append("x" if i == 1 else f"x**{i}")
        if j:
            factors.append("y" if j == 1 else f"y**{j}")
        parts.append("*".join(factors))
    return " + ".join(parts)


def compile_rhs(vf: VectorField):
    """Compile the field into a float right-hand side f(t, (x, y))."""
    src = (
        "def _rhs(t, z):\n"
        "    x = z[0]\n"
        "    y = z[1]\n"
        f"    return ({_poly_expr(vf.p)}, {_poly_expr(vf.q)})\n"
    )
    namespace: dict = {}
    exec(src, {"__builtins__": {}}, namespace)
    return namespace["_rhs"]


@dataclass
class Trajectory:
    """Dense trajectory made of one or more integrator segments."""

    segments: list  # (t_start, OdeSolution) with local times
    t_end: float
    escaped: bool
    escape_time: float | None
    end_state: tuple[float, float]

    def __call__(self, t: float) -> tuple[float, float]:
        for t_start, sol in reversed(self.segments):
            if t >= t_start - 1e-15:
                z = sol(t - t_start)
                return float(z[0]), float(z[1])
        t_start, sol = self.segments[0]
        z = sol(0.0)
        return float(z[0]), float(z[1])

    def sample(self, n: int) -> list[tuple[float, float, float]]:
        ts = np.linspace(0.0, self.t_end, n)
        return [(float(t), *self(float(t))) for t in ts]


def _escape_event(cfg: IntegratorConfig):
    r2 = cfg.escape_radius**2

    def event(t, z):
        return z[0] * z[0] + z[1] * z[1] - r2

    event.terminal = True
    event.direction = 1
    return event


def integrate(
    vf: VectorField,
    x0: tuple[float, float],
    cfg: IntegratorConfig | None = None,
    t_final: float | None = None,
) -> Trajectory:
    """Integrate from x0 until t_final (default max_time) or escape."""
    cfg = cfg or IntegratorConfig()
    t_final = cfg.max_time if t_final is None else t_final
    rhs = compile_rhs(vf)
    event = _escape_event(cfg)
    segments = []
    t_done = 0.0
    state = (float(x0[0]), float(x0[1]))
    escaped = False
    escape_time = None
    while t_done < t_final - 1e-12:
        span = min(_CHUNK, t_final - t_done)
        sol = solve_ivp(
            rhs, (0.0, span), state, method="RK45",
            rtol=cfg.rel_tol, atol=cfg.abs_tol, dense_output=True, events=[event],
        )
        if sol.status == -1:
            raise StepUnderflow(sol.message)
        segments.append((t_done, sol.sol))
        t_done += float(sol.t[-1])
        state = (float(sol.y[0, -1]), float(sol.y[1, -1]))
        if sol.status == 1:
            escaped = True
            escape_time = t_done
            break
    return Trajectory(segments, t_done, escaped, escape_time, state)


def _bisect_time(dense, a: float, b: float, width: float = 1e-12) -> float:
    fa = float(dense(a)[1])
    while b - a > width:
        mid = 0.5 * (a + b)
        fm = float(dense(mid)[1])
        if fm == 0.0:
            return mid
        if (fa > 0.0) != (fm > 0.0):
            b = mid
        else:
            a, fa = mid, fm
    return 0.5 * (a + b)


def _subdivided_times(t_nodes: np.ndarray) -> np.ndarray:
    """Each solver step interval subdivided _SUBDIV times, as one array."""
    left = t_nodes[:-1]
    width = np.diff(t_nodes)
    offsets = np.arange(_SUBDIV) / _SUBDIV
    taus = (left[:, None] + width[:, None] * offsets[None, :]).ravel()
    return np.append(taus, t_nodes[-1])


def _first_matching_crossing(vf, start, cfg, direction, t_guard=_T_GUARD):
    """First crossing of {y=0, x>0} with the requested orientation.

    direction: +1 (y increasing), -1 (y decreasing) or None for either.
    Returns ("crossing", t, x, d), ("escape", t) or ("timeout",).
    """
    rhs = compile_rhs(vf)
    event = _escape_event(cfg)
    t_done = 0.0
    state = (float(start[0]), float(start[1]))
    chunk = _FIRST_CHUNK
    while t_done < cfg.max_time - 1e-12:
        span = min(chunk, cfg.max_time - t_done)
        chunk = min(2.0 * chunk, _CHUNK * 4)
        sol = solve_ivp(
            rhs, (0.0, span), state, method="RK45",
            rtol=cfg.rel_tol, atol=cfg.abs_tol, dense_output=True, events=[event],
        )
        if sol.status == -1:
            raise StepUnderflow(sol.message)
        dense = sol.sol
        if len(sol.t) > 1:
            taus = _subdivided_times(sol.t)
            zs = dense(taus)
            ys = zs[1]
            if direction in (None, -1):
                down = np.nonzero((ys[:-1] > 0.0) & (ys[1:] < 0.0))[0]
            else:
                down = np.empty(0, dtype=int)
            if direction in (None, 1):
                up = np.nonzero((ys[:-1] < 0.0) & (ys[1:] > 0.0))[0]
            else:
                up = np.empty(0, dtype=int)
            candidates = sorted(
                [(int(i), -1) for i in down] + [(int(i), 1) for i in up]
            )
            for i, d_here in candidates:
                tc = _bisect_time(dense, float(taus[i]), float(taus[i + 1]))
                t_global = t_done + tc
                if t_global <= t_guard:
                    continue
                xc = float(dense(tc)[0])
                if xc > 0.0:
                    return ("crossing", t_global, xc, d_here)
        t_done += float(sol.t[-1])
        state = (float(sol.y[0, -1]), float(sol.y[1, -1]))
        if sol.status == 1:
            return ("escape", t_done)
    return ("timeout",)


def return_map_verdict(
    vf: VectorField, x0: tuple[float, float], cfg: IntegratorConfig | None = None
) -> OrbitVerdict:
    """Decide periodicity through the section {y = 0, x > 0}.

    Periodic only when the first same-orientation return lands within
    section_closure_tol of the start; a displaced return is reported as
    inconclusive (the orbit is spiralling), never coerced.
    """
    cfg = cfg or IntegratorConfig()
    x_start = float(x0[0])
    if float(x0[1]) != 0.0 or x_start <= 0.0:
        raise ValueError("start must lie on the section {y = 0, x > 0}")
    q0 = vf.q.evaluate_float(x_start, 0.0)
    if q0 == 0.0:
        return OrbitVerdict.inconclusive("start is an equilibrium or a section tangency")
    direction = 1 if q0 > 0 else -1
    try:
        res = _first_matching_crossing(vf, (x_start, 0.0), cfg, direction)
    except StepUnderflow as exc:
        return OrbitVerdict.inconclusive(f"integrator failure: {exc}")
    if res[0] == "escape":
        return OrbitVerdict.escaping(res[1])
    if res[0] == "timeout":
        return OrbitVerdict.inconclusive("no section return within max_time")
    _, t_return, x_return, _ = res
    closure = abs(x_return - x_start)
    if closure <= cfg.section_closure_tol:
        return OrbitVerdict.periodic(t_return, closure)
    return OrbitVerdict.inconclusive(f"section return displaced by {closure:.3e}")


def orbit_verdict(
    vf: VectorField, point: tuple[float, float], cfg: IntegratorConfig | None = None
) -> OrbitVerdict:
    """Verdict for an arbitrary initial condition.

    Off-section points are carried forward to their first transversal hit of
    {y = 0, x > 0}, from which the return map decides.
    """
    cfg = cfg or IntegratorConfig()
    x, y = float(point[0]), float(point[1])
    if y == 0.0 and x > 0.0:
        return return_map_verdict(vf, (x, 0.0), cfg)
    speed = abs(vf.p.evaluate_float(x, y)) + abs(vf.q.evaluate_float(x, y))
    if speed == 0.0:
        return OrbitVerdict.inconclusive("initial condition is an equilibrium")
    try:
        res = _first_matching_crossing(vf, (x, y), cfg, direction=None)
    except StepUnderflow as exc:
        return OrbitVerdict.inconclusive(f"integrator failure: {exc}")
    if res[0] == "escape":
        return OrbitVerdict.escaping(res[1])
    if res[0] == "timeout":
        return OrbitVerdict.inconclusive("orbit never reaches the section {y = 0, x > 0}")
    return return_map_verdict(vf, (res[2], 0.0), cfg)


# -- exact finite-equilibria scan -------------------------------------------


def _to_sympy(p: Poly2, x, y):
    import sympy

    if p.is_zero:
        return sympy.Integer(0)
    return sympy.Add(
        *[
            sympy.Rational(c.numerator, c.denominator) * x**i * y**j
            for (i, j), c in p.terms.items()
        ]
    )


def _curve_sample(g_poly, radius: float) -> tuple[float, float] | None:
    """Some real point on the curve g = 0 within the radius, if one is found."""
    probes = [Fraction(v) for v in (0, 1, -1, Fraction(1, 2), -Fraction(1, 2), 2, -2)]
    gx = Poly2({(m[0], m[1]): Fraction(c.p, c.q) for m, c in zip(g_poly.monoms(), g_poly.coeffs())})
    for x0 in probes:
        coeffs = [Fraction(0)] * (gx.degree + 2)
        for (i, j), c in gx.terms.items():
            coeffs[j] += c * x0**i
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        if not coeffs or all(c == 0 for c in coeffs):
            continue
        if len(coeffs) == 1:
            continue
        for root, _ in real_roots(coeffs):
            pt = (float(x0), root.approx())
            if math.hypot(*pt) <= radius:
                return pt
    return None


def _pow_range(lo: Fraction, hi: Fraction, k: int) -> tuple[Fraction, Fraction]:
    if k == 0:
        return Fraction(1), Fraction(1)
    a, b = lo**k, hi**k
    if k % 2 == 1:
        return a, b
    if lo <= 0 <= hi:
        return Fraction(0), max(a, b)
    return min(a, b), max(a, b)


def _poly_box_range(p: Poly2, bx, by) -> tuple[Fraction, Fraction]:
    """Exact rational bounds of p over the box bx x by."""
    total_lo = Fraction(0)
    total_hi = Fraction(0)
    for (i, j), c in p.terms.items():
        xlo, xhi = _pow_range(bx[0], bx[1], i)
        ylo, yhi = _pow_range(by[0], by[1], j)
        products = (xlo * ylo, xlo * yhi, xhi * ylo, xhi * yhi)
        total_lo += c * (min(products) if c > 0 else max(products))
        total_hi += c * (max(products) if c > 0 else min(products))
    return total_lo, total_hi


def _resultant_coeffs(P, Q, eliminate) -> list[Fraction]:
    import sympy

    res = sympy.resultant(P, Q, eliminate)
    keep = [s for s in (res.free_symbols or set())]
    if not keep:
        value = sympy.Rational(res)
        return [Fraction(value.p, value.q)]
    poly = sympy.Poly(res, keep[0])
    coeffs = [Fraction(0)] * (poly.degree() + 1)
    for (k,), c in poly.terms():
        c = sympy.Rational(c)
        coeffs[k] = Fraction(c.p, c.q)
    return coeffs


def finite_equilibria(vf: VectorField, radius: float = 1e3) -> list[tuple[float, float]]:
    """All real non-origin equilibria with |(x, y)| <= radius, found exactly.

    Candidate coordinates come from the two elimination resultants of
    (p, q); each candidate pair is confirmed either by exact rational
    evaluation or by bounding p and q over the (<= 1e-12 wide) enclosing
    box with exact interval arithmetic.  A common factor of the two
    components (a curve of equilibria) is divided out and witnessed by a
    single sample point on the curve.
    """
    import sympy

    x, y = sympy.symbols("x y")
    p_expr = _to_sympy(vf.p, x, y)
    q_expr = _to_sympy(vf.q, x, y)
    found: list[tuple[float, float]] = []
    if vf.p.is_zero or vf.q.is_zero:
        g_poly = sympy.Poly(q_expr if vf.p.is_zero else p_expr, x, y)
        pt = _curve_sample(g_poly, radius)
        return [pt] if pt else []
    g = sympy.gcd(sympy.Poly(p_expr, x, y, domain="QQ"), sympy.Poly(q_expr, x, y, domain="QQ"))
    p_local, q_local = vf.p, vf.q
    if sympy.total_degree(g.as_expr()) >= 1:
        pt = _curve_sample(sympy.Poly(g, x, y), radius)
        if pt is not None:
            found.append(pt)
        p_expr = sympy.quo(p_expr, g.as_expr(), x)
        q_expr = sympy.quo(q_expr, g.as_expr(), x)
        p_local = _from_sympy(p_expr, x, y)
        q_local = _from_sympy(q_expr, x, y)
    rx = _resultant_coeffs(p_expr, q_expr, y)
    ry = _resultant_coeffs(p_expr, q_expr, x)
    if all(c == 0 for c in rx) or all(c == 0 for c in ry):
        return sorted(set(found))
    if len(rx) == 1 or len(ry) == 1:
        return sorted(set(found))
    bound = Fraction(int(radius) + 1)
    xs = [r for r, _ in real_roots(rx) if abs(r.approx()) <= bound]
    ys = [r for r, _ in real_roots(ry) if abs(r.approx()) <= bound]
    for rx_root in xs:
        bx = rx_root.bounds()
        for ry_root in ys:
            if rx_root.kind == "rational" and ry_root.kind == "rational":
                if rx_root.a == 0 and ry_root.a == 0:
                    continue
                if (
                    p_local.evaluate(rx_root.a, ry_root.a) == 0
                    and q_local.evaluate(rx_root.a, ry_root.a) == 0
                ):
                    found.append((float(rx_root.a), float(ry_root.a)))
                continue
            by = ry_root.bounds()
            p_lo, p_hi = _poly_box_range(p_local, bx, by)
            q_lo, q_hi = _poly_box_range(q_local, bx, by)
            if p_lo <= 0 <= p_hi and q_lo <= 0 <= q_hi:
                found.append((rx_root.approx(), ry_root.approx()))
    found = [pt for pt in found if 0 < math.hypot(*pt) <= radius]
    found.sort()
    deduped: list[tuple[float, float]] = []
    for pt in found:
        if not any(math.hypot(pt[0] - q[0], pt[1] - q[1]) < 1e-9 for q in deduped):
            deduped.append(pt)
    return deduped


def _from_sympy(expr, x, y) -> Poly2:
    import sympy

    poly = sympy.Poly(expr, x, y)
    terms = {}
    for (i, j), c in poly.terms():
        c = sympy.Rational(c)
        terms[(i, j)] = Fraction(c.p, c.q)
    return Poly2(terms)


# -- first integrals ---------------------------------------------------------


def lie_derivative(h: Poly2, vf: VectorField) -> Poly2:
    return h.partial("x") * vf.p + h.partial("y") * vf.q


def first_integral_check(vf: VectorField, h: Poly2, traj: Trajectory, n_samples: int = 2001) -> float:
    """Max drift of h along the trajectory; h must be exactly conserved."""
    if not lie_derivative(h, vf).is_zero:
        raise NotConserved("Lie derivative of the candidate is not the zero polynomial")
    samples = traj.sample(n_samples)
    h0 = h.evaluate_float(samples[0][1], samples[0][2])
    return max(abs(h.evaluate_float(px, py) - h0) for _, px, py in samples)


def conserved_quantity(tag: str, params: FamilyParams) -> Poly2:
    """Known polynomial first integrals of the Hamiltonian-like regimes."""
    c1, b1, a1 = params.c1, params.b1, params.a1
    half = Fraction(1, 2)
    if tag == "aa1":
        return Poly2({(2, 0): half, (0, 2): half, (2, 2): -c1 / 2})
    if tag == "aa2":
        return Poly2({(2, 0): half, (4, 0): -b1, (0, 2): half})
    if tag == "aa3":
        return Poly2({
            (2, 0): half, (3, 0): -a1 / 3, (4, 0): -c1 / 4,
            (0, 2): half, (1, 2): a1, (2, 2): -c1 / 2,
        })
    raise ValueError(f"no catalogued first integral for {tag!r}")


# -- the global-center verdict ------------------------------------------------


DEFAULT_RADII = (0.5, 1.0, 2.0, 5.0)
DEFAULT_ANGLES = 8


@dataclass(frozen=True)
class GlobalVerdict:
    tag: str  # "global-center-consistent" | "not-global" | "inconclusive"
    witness: tuple[float, float] | None
    samples: tuple[tuple[tuple[float, float], OrbitVerdict], ...]
    extra_equilibria: tuple[tuple[float, float], ...]
    line_at_infinity: bool

    @property
    def inconclusive_fraction(self) -> float:
        if not self.samples:
            return 0.0
        bad = sum(1 for _, v in self.samples if v.tag == "inconclusive")
        return bad / len(self.samples)

    def to_json(self) -> dict:
        return {
            "tag": self.tag,
            "witness": list(self.witness) if self.witness else None,
            "line_at_infinity": self.line_at_infinity,
            "extra_equilibria": [list(p) for p in self.extra_equilibria],
            "inconclusive_fraction": self.inconclusive_fraction,
            "samples": [
                {"point": list(pt), "verdict": v.to_json()} for pt, v in self.samples
            ],
        }


def sample_points(radii, angles: int = DEFAULT_ANGLES) -> list[tuple[float, float]]:
    pts = []
    for r in radii:
        for k in range(angles):
            theta = 2.0 * math.pi * k / angles
            pts.append((float(r) * math.cos(theta), float(r) * math.sin(theta)))
    return pts


def global_center_verdict(
    params: FamilyParams,
    cfg: IntegratorConfig | None = None,
    sample_radii=None,
    angles: int = DEFAULT_ANGLES,
) -> GlobalVerdict:
    """Empirical test of the global-center characterization.

    Scans exactly for extra finite equilibria, integrates a deterministic
    fan of orbits, and aggregates: any escaping orbit or extra equilibrium
    refutes globality; an all-periodic fan is consistent with it.  Systems
    with a line of equilibria at infinity fall outside the characterization,
    so the flag is carried in the verdict for separate reporting.
    """
    cfg = cfg or IntegratorConfig()
    radii = DEFAULT_RADII if sample_radii is None else tuple(sample_radii)
    report = center_cases(params)
    if not report.is_center:
        warnings.warn("parameters do not satisfy any center condition", stacklevel=2)
    vf = build_system(params)
    line = infinite_equilibria(vf).line_of_equilibria
    extra = tuple(finite_equilibria(vf, cfg.escape_radius))
    samples = []
    escape_witness = None
    periodic_seen = False
    for pt in sample_points(radii, angles):
        verdict = orbit_verdict(vf, pt, cfg)
        samples.append((pt, verdict))
        if verdict.tag == "escaping" and escape_witness is None:
            escape_witness = pt
        if verdict.tag == "periodic":
            periodic_seen = True
    if escape_witness is not None or extra:
        witness = escape_witness if escape_witness is not None else extra[0]
        tag = "not-global"
    elif periodic_seen:
        witness = None
        tag = "global-center-consistent"
    else:
        witness = None
        tag = "inconclusive"
    return GlobalVerdict(tag, witness, tuple(samples), extra, line)

"""Majorization certificates for spectral bounding polynomials.

For a d-regular graph G on n_G vertices, (1/n_G) * sum_lam p(lam, d) is the
expectation of p(X, d) under the uniform spectral measure X of G — a
probability measure on [-d, d] with mean 0 and second moment d.  The
certification question is whether, among all such measures, the expectation
is maximized by the spectral measure of the extremal clique:

  even case (y = (x/d)^2):  q(y) = p(d*sqrt(y), d) / d^n on [0, 1];
      the chord L through (0, q(0)) and (1, q(1)) majorizes q, so
      E[q(Y)] <= L(E[Y]) = L(1/d), attained exactly by Y supported on
      {0, 1} with mean 1/d — the spectral measure of K_{d,d};

  odd case (y = x/d):  q(y) = p(d*y, d) / d^n on [-1, 1];
      the parabola L with double contact at y0 = -1/d and contact at 1
      majorizes q, so E[q(Y)] <= E[L(Y)] which depends only on the first
      two moments, attained exactly by Y supported on {y0, 1} — the
      spectral measure of K_{d+1}.

A certificate is the exact factorization L - q = (contact factors) * r
together with a proof that the residual r is strictly positive on the
open interval (no roots by Sturm count, positive sign at the midpoint)
and, in the odd case, nonnegative at the endpoints.  Everything is exact
rational arithmetic; verdicts are bit-reproducible.  Certificates are
per-d: certify_threshold scans an explicit range and reports the scanned
threshold, never an all-d claim.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from homcert.poly import BivarPoly, UniPoly

WITNESS_WIDTH = Fraction(1, 2**20)

PARITIES = ("even", "odd")


def _frac_str(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _parse_frac(s):
    num, den = s.split("/")
    return Fraction(int(num), int(den))


def _unipoly_json(p):
    return [_frac_str(c) for c in p.coeffs]


def _unipoly_from_json(items):
    return UniPoly([_parse_frac(s) for s in items])


def transform_even(p, d):
    """q(y) = p(d*sqrt(y), d) / d^n with n = total degree of p.

    Requires every lambda-exponent of p to be even: lam^(2k) d^j becomes
    y^k d^(2k+j-n).
    """
    if d < 2:
        raise ValueError("d must be at least 2")
    if any(k % 2 for k, _ in p.coeffs):
        raise ValueError("even transform requires even lambda-exponents")
    n = p.total_degree()
    d = Fraction(d)
    terms = {}
    for (k, j), c in p.coeffs.items():
        e = k // 2
        terms[e] = terms.get(e, Fraction(0)) + c * d ** (k + j - n)
    return UniPoly.from_terms(terms)


def transform_odd(p, d):
    """q(y) = p(d*y, d) / d^n with n = total degree of p:
    lam^k d^j becomes y^k d^(k+j-n)."""
    if d < 2:
        raise ValueError("d must be at least 2")
    n = p.total_degree()
    d = Fraction(d)
    terms = {}
    for (k, j), c in p.coeffs.items():
        terms[k] = terms.get(k, Fraction(0)) + c * d ** (k + j - n)
    return UniPoly.from_terms(terms)


# ---------------------------------------------------------------------------
# Exact positivity via Sturm sequences


def _sturm_chain(p):
    """Canonical Sturm chain of a squarefree polynomial, each element
    content-normalized (sign-preserving) to control coefficient growth."""
    chain = [p.content_primitive()[1]]
    deriv = p.derivative()
    if not deriv.is_zero():
        chain.append(deriv.content_primitive()[1])
        while chain[-1].degree > 0:
            rem = -(chain[-2] % chain[-1])
            if rem.is_zero():
                break
            chain.append(rem.content_primitive()[1])
    return chain


def _variations(chain, x):
    signs = []
    for p in chain:
        v = p(x)
        if v:
            signs.append(1 if v > 0 else -1)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _poly_gcd(a, b):
    while not b.is_zero():
        a, b = b, a % b
    if a.is_zero():
        return a
    return a.content_primitive()[1]


def _squarefree(p):
    g = _poly_gcd(p, p.derivative())
    if g.degree <= 0:
        return p
    return p.divexact(g)


def _deflate_at(p, x):
    """Divide out (y - x) as long as x is a root; returns (p, multiplicity)."""
    mult = 0
    factor = UniPoly((-Fraction(x), 1))
    while not p.is_zero() and p(x) == 0:
        p = p.divexact(factor)
        mult += 1
    return p, mult


def isolate_roots(p, a, b, width=WITNESS_WIDTH):
    """Disjoint isolating intervals, each holding exactly one distinct root
    of p in the open interval (a, b), refined to width < `width`.  Exact
    rational roots come back as degenerate [m, m] intervals.  Endpoints a, b
    must not be roots."""
    a, b = Fraction(a), Fraction(b)
    sf = _squarefree(p.content_primitive()[1])
    if sf(a) == 0 or sf(b) == 0:
        raise ValueError("isolate_roots requires non-root endpoints")
    roots = []
    chain = _sturm_chain(sf)

    def count(x, y):
        return _variations(chain, x) - _variations(chain, y)

    work = [(a, b, count(a, b))]
    while work:
        x, y, cnt = work.pop()
        if cnt == 0:
            continue
        if cnt == 1:
            while y - x >= width:
                m = (x + y) / 2
                if sf(m) == 0:
                    x = y = m
                    break
                if count(x, m) == 1:
                    y = m
                else:
                    x = m
            roots.append((x, y))
            continue
        m = (x + y) / 2
        if sf(m) == 0:
            roots.append((m, m))
            sf, _ = _deflate_at(sf, m)
            chain = _sturm_chain(sf)
            work = [(u, v, count(u, v)) for u, v, _ in work]
            work.append((x, m, count(x, m)))
            work.append((m, y, count(m, y)))
        else:
            work.append((x, m, count(x, m)))
            work.append((m, y, count(m, y)))
    return sorted(roots)


@dataclass(frozen=True)
class PositivityVerdict:
    ok: bool
    boundary_zeros: tuple  # endpoints of the closed interval that are roots
    witness_point: Fraction | None  # exact point with r < 0, when one exists
    witness_interval: tuple | None  # isolating interval of an offending root


def sturm_nonneg_on_interval(r, a, b, open_interval):
    """Exact positivity of r on an interval.

    open_interval=True: is r > 0 on (a, b)?  (no roots inside, positive
    sign representative).  open_interval=False: is r >= 0 on [a, b]?
    (interior touch-zeros allowed).  On failure the verdict carries an
    exact negative point and/or an isolating root interval refined to
    width < 2^-20.
    """
    if r.is_zero():
        raise ValueError("positivity of the zero polynomial is undefined")
    a, b = Fraction(a), Fraction(b)
    if not a < b:
        raise ValueError("interval must satisfy a < b")
    boundary = tuple(x for x in (a, b) if r(x) == 0)
    sf = _squarefree(r.content_primitive()[1])
    sf, _ = _deflate_at(sf, a)
    sf, _ = _deflate_at(sf, b)
    if sf.degree <= 0:
        # every root of r sits at an endpoint, so r has one sign on (a, b):
        # read it off the midpoint of the original polynomial (the
        # squarefree part may have shed sign-carrying square factors)
        mid = (a + b) / 2
        v = r(mid)
        if open_interval:
            return PositivityVerdict(v > 0, boundary, mid if v < 0 else None, None)
        ok = v > 0 and r(a) >= 0 and r(b) >= 0
        wp = mid if v < 0 else a if r(a) < 0 else b if r(b) < 0 else None
        return PositivityVerdict(ok, boundary, wp, None)
    roots = isolate_roots(sf, a, b)

    # sample points between consecutive root intervals (and the margins)
    cuts = [a] + [x for lo, hi in roots for x in (lo, hi)] + [b]
    samples = []
    for left, right in zip(cuts[::2], cuts[1::2]):
        samples.append((left + right) / 2)
    negative = [s for s in samples if r(s) < 0]

    if open_interval:
        ok = not roots and all(r(s) > 0 for s in samples)
        return PositivityVerdict(
            ok,
            boundary,
            negative[0] if negative else None,
            roots[0] if roots else None,
        )
    ok = r(a) >= 0 and r(b) >= 0 and not negative
    wp = None
    if negative:
        wp = negative[0]
    elif r(a) < 0:
        wp = a
    elif r(b) < 0:
        wp = b
    return PositivityVerdict(ok, boundary, wp, roots[0] if (not ok and roots) else None)


# ---------------------------------------------------------------------------
# Majorant certificates


@dataclass(frozen=True)
class MajorantCertificate:
    """Exact certificate that the chord/parabola majorizes q on its domain.

    The factorization majorant - q = (designed contact factors) * residual
    is an exact polynomial identity; `passed` certifies the residual is
    strictly positive on the open domain (and nonnegative at the endpoints
    in the odd case).  `flat` marks the degenerate majorant == q case,
    which passes without any uniqueness claim.  On failure, `witness`
    locates the defect: a rational y with q(y) > majorant(y) when the gap
    goes strictly negative, else an isolating interval of an interior
    residual root (a non-designed contact)."""

    source: BivarPoly
    d: int
    parity: str
    q: UniPoly
    majorant: UniPoly
    designed_contacts: tuple  # of (point, multiplicity)
    residual: UniPoly
    passed: bool
    flat: bool
    witness: dict | None

    @property
    def verdict(self):
        return "pass" if self.passed else "fail"

    def domain(self):
        return (Fraction(0), Fraction(1)) if self.parity == "even" else (
            Fraction(-1),
            Fraction(1),
        )

    def contact_factor_poly(self):
        """The exact divisor of majorant - q: each contact contributes its
        factor oriented to be nonnegative on the domain interior, i.e.
        (1 - y) at the right endpoint and (y - t) elsewhere."""
        right = self.domain()[1]
        out = UniPoly((1,))
        for point, mult in self.designed_contacts:
            point = Fraction(point)
            if point == right:
                factor = UniPoly((point, -1))
            else:
                factor = UniPoly((-point, 1))
            for _ in range(mult):
                out = out * factor
        return out

    def to_json_dict(self):
        return {
            "schema": "majorant-certificate/1",
            "source": self.source.coefficient_list(),
            "d": self.d,
            "parity": self.parity,
            "q": _unipoly_json(self.q),
            "majorant": _unipoly_json(self.majorant),
            "designed_contacts": [
                [_frac_str(pt), mult] for pt, mult in self.designed_contacts
            ],
            "residual": _unipoly_json(self.residual),
            "verdict": self.verdict,
            "flat": self.flat,
            "witness": self.witness,
        }

    @classmethod
    def from_json_dict(cls, data):
        if data.get("schema") != "majorant-certificate/1":
            raise ValueError("not a majorant-certificate/1 document")
        return cls(
            source=BivarPoly.from_coefficient_list(data["source"]),
            d=int(data["d"]),
            parity=data["parity"],
            q=_unipoly_from_json(data["q"]),
            majorant=_unipoly_from_json(data["majorant"]),
            designed_contacts=tuple(
                (_parse_frac(pt), int(m)) for pt, m in data["designed_contacts"]
            ),
            residual=_unipoly_from_json(data["residual"]),
            passed=data["verdict"] == "pass",
            flat=bool(data["flat"]),
            witness=data["witness"],
        )


def _strict_witness(diff, lo, hi, start):
    """Rational y in (lo, hi) with diff(y) < 0, found by shrinking toward
    `start` (a point where negativity is known to occur nearby)."""
    span = (hi - lo) / 4
    y = start
    while span >= WITNESS_WIDTH / 16:
        for cand in (y, y - span, y + span):
            if lo < cand < hi and diff(cand) < 0:
                return cand
        span /= 2
    return None


def majorant_check_even(p, d):
    """Chord majorization on [0, 1] for an even-parity polynomial.

    L(y) = q(0) + y*(q(1) - q(0)); L - q = y*(1-y)*r; pass iff r has no
    roots in (0, 1) and r(1/2) > 0.  A pass certifies: over d-regular
    spectra, (1/n)*sum p(lam, d) is uniquely maximized by the K_{d,d}
    spectral measure."""
    q = transform_even(p, d)
    ell = UniPoly((q(0), q(1) - q(0)))
    diff = ell - q
    contacts = ((Fraction(0), 1), (Fraction(1), 1))
    if diff.is_zero():
        return MajorantCertificate(
            source=p, d=d, parity="even", q=q, majorant=ell,
            designed_contacts=contacts, residual=UniPoly(()),
            passed=True, flat=True, witness=None,
        )
    r = diff.divexact(UniPoly((0, 1, -1)))  # y*(1-y) = y - y^2
    verdict = sturm_nonneg_on_interval(r, 0, 1, open_interval=True)
    witness = None
    if not verdict.ok:
        witness = _make_witness(diff, r, verdict, Fraction(0), Fraction(1))
    return MajorantCertificate(
        source=p, d=d, parity="even", q=q, majorant=ell,
        designed_contacts=contacts, residual=r,
        passed=verdict.ok, flat=False, witness=witness,
    )


def majorant_check_odd(p, d):
    """Parabola majorization on [-1, 1].

    L has double contact with q at y0 = -1/d and single contact at 1;
    L - q = (y-y0)^2*(1-y)*r; pass iff r >= 0 at both endpoints and r > 0
    on the open interval.  A pass certifies: over d-regular spectra,
    (1/n)*sum p(lam, d) is uniquely maximized by the K_{d+1} spectral
    measure."""
    q = transform_odd(p, d)
    y0 = Fraction(-1, d)
    q0, q1 = q(y0), q(Fraction(1))
    dq0 = q.derivative()(y0)
    c = (q1 - q0 - (1 - y0) * dq0) / (1 - y0) ** 2
    base = UniPoly((-y0, 1))  # (y - y0)
    ell = UniPoly((q0,)) + dq0 * base + c * base * base
    diff = ell - q
    contacts = ((y0, 2), (Fraction(1), 1))
    if diff.is_zero():
        return MajorantCertificate(
            source=p, d=d, parity="odd", q=q, majorant=ell,
            designed_contacts=contacts, residual=UniPoly(()),
            passed=True, flat=True, witness=None,
        )
    r = diff.divexact(base * base * UniPoly((1, -1)))  # (y-y0)^2 * (1-y)
    inner = sturm_nonneg_on_interval(r, -1, 1, open_interval=True)
    end_ok = r(Fraction(-1)) >= 0 and r(Fraction(1)) >= 0
    passed = inner.ok and end_ok
    witness = None
    if not passed:
        if r(Fraction(-1)) < 0:
            witness = {"type": "strict", "y": _frac_str(Fraction(-1))}
        elif not inner.ok:
            witness = _make_witness(diff, r, inner, Fraction(-1), Fraction(1))
        else:
            # r(1) < 0: the gap dips negative just inside the endpoint
            y = _strict_witness(diff, Fraction(-1), Fraction(1),
                                1 - WITNESS_WIDTH)
            witness = {"type": "strict", "y": _frac_str(y)}
    return MajorantCertificate(
        source=p, d=d, parity="odd", q=q, majorant=ell,
        designed_contacts=contacts, residual=r,
        passed=passed, flat=False, witness=witness,
    )


def _make_witness(diff, r, verdict, lo, hi):
    """Failure evidence: prefer an exact point where the majorant gap is
    strictly negative; otherwise report the isolating interval of the
    offending interior residual root (a touch-contact)."""
    if verdict.witness_point is not None:
        y = verdict.witness_point
        if diff(y) < 0:
            return {"type": "strict", "y": _frac_str(y)}
        y2 = _strict_witness(diff, lo, hi, y)
        if y2 is not None:
            return {"type": "strict", "y": _frac_str(y2)}
    if verdict.witness_interval is not None:
        a, b = verdict.witness_interval
        # probe beyond the root for a strict sign change
        for probe in (b + (b - a), (a + b) / 2, a - (b - a)):
            if lo < probe < hi and diff(probe) < 0:
                return {"type": "strict", "y": _frac_str(probe)}
        return {
            "type": "contact",
            "interval": [_frac_str(a), _frac_str(b)],
        }
    return None


def majorant_check(p, parity, d):
    if parity == "even":
        return majorant_check_even(p, d)
    if parity == "odd":
        return majorant_check_odd(p, d)
    raise ValueError(f"parity must be one of {PARITIES}")


def extremal_measure(parity, d):
    """The conjectured-extremal spectral measure as ((value, weight), ...):
    K_{d,d} for even parity, K_{d+1} for odd."""
    d = Fraction(d)
    if parity == "even":
        return (
            (d, Fraction(1, 2 * int(d))),
            (-d, Fraction(1, 2 * int(d))),
            (Fraction(0), 1 - 1 / d),
        )
    if parity == "odd":
        return ((d, 1 / (d + 1)), (Fraction(-1), d / (d + 1)))
    raise ValueError(f"parity must be one of {PARITIES}")


def measure_expectation(p, parity, d):
    """E[p(X, d)] under the extremal measure — the certified maximum of
    (1/n_G) * sum_lam p(lam, d) whenever majorant_check passes."""
    return sum(
        w * p.evaluate(v, d) for v, w in extremal_measure(parity, d)
    )


@dataclass(frozen=True)
class ThresholdReport:
    """Scanned-range certification: verdicts for every d in [lo, hi] and
    the least d* whose suffix is all-pass.  This is explicitly a
    scanned-range certificate, not an all-d proof."""

    source: BivarPoly
    parity: str
    lo: int
    hi: int
    certificates: dict  # d -> MajorantCertificate
    threshold: int | None
    failures: tuple

    def to_json_dict(self):
        return {
            "schema": "threshold-report/1",
            "source": self.source.coefficient_list(),
            "parity": self.parity,
            "d_range": [self.lo, self.hi],
            "scanned_range_only": True,
            "threshold": self.threshold,
            "failures": list(self.failures),
            "verdicts": [
                {
                    "d": d,
                    "verdict": cert.verdict,
                    "flat": cert.flat,
                    "witness": cert.witness,
                }
                for d, cert in sorted(self.certificates.items())
            ],
        }


def certify_threshold(p, parity, lo, hi):
    """Run the parity-appropriate majorant check for every d in [lo, hi];
    the threshold is the smallest d in range such that every scanned
    d' >= d passes (None when the top of the range fails)."""
    if lo > hi:
        raise ValueError("empty d range")
    if lo < 2:
        raise ValueError("d must be at least 2")
    certs = {d: majorant_check(p, parity, d) for d in range(lo, hi + 1)}
    failures = tuple(d for d in range(lo, hi + 1) if not certs[d].passed)
    threshold = None
    if not failures:
        threshold = lo
    elif failures[-1] < hi:
        threshold = failures[-1] + 1
    return ThresholdReport(
        source=p,
        parity=parity,
        lo=lo,
        hi=hi,
        certificates=certs,
        threshold=threshold,
        failures=failures,
    )

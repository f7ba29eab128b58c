"""Canonical text rendering for polynomials and operators.

The output is valid input for the parser in :mod:`qdesing.grammar`; printing
then parsing a canonical object reproduces it exactly.
"""

from __future__ import annotations

from .rationals import rat_str


def _join_terms(parts):
    if not parts:
        return "0"
    out = parts[0]
    for t in parts[1:]:
        if t.startswith("-"):
            out += " - " + t[1:]
        else:
            out += " + " + t
    return out


def _monomial(eq: int, ex: int, xname: str = "x") -> str:
    factors = []
    if eq == 1:
        factors.append("q")
    elif eq > 1:
        factors.append("q^%d" % eq)
    if ex == 1:
        factors.append(xname)
    elif ex > 1:
        factors.append("%s^%d" % (xname, ex))
    return "*".join(factors)


def _coeff_times(coeff, mono: str) -> str:
    cs = rat_str(coeff)
    if not mono:
        return cs
    if cs == "1":
        return mono
    if cs == "-1":
        return "-" + mono
    return "%s*%s" % (cs, mono)


def render_bipoly(p, xname: str = "x") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for (eq, ex), v in p.sorted_terms():
        parts.append(_coeff_times(v, _monomial(eq, ex, xname)))
    return _join_terms(parts)


def _needs_parens(s: str) -> bool:
    if s.startswith("-"):
        return True
    depth = 0
    for ch in s:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif depth == 0 and (ch in "+-/" or ch == " "):
            return True
    return False


def render_ratfunc(v) -> str:
    """Element of K(q) in the shared grammar."""
    if v.is_polynomial():
        return str(v.num)
    ns, ds = str(v.num), str(v.den)
    if _needs_parens(ns):
        ns = "(%s)" % ns
    if _needs_parens(ds) or "*" in ds or "^" in ds:
        ds = "(%s)" % ds
    return "%s/%s" % (ns, ds)


def render_polyx(f, xname: str = "x") -> str:
    if f.is_zero():
        return "0"
    parts = []
    for j in range(f.degree, -1, -1):
        v = f[j]
        if v.is_zero():
            continue
        if j == 0:
            mono = ""
        elif j == 1:
            mono = xname
        else:
            mono = "%s^%d" % (xname, j)
        if v.is_polynomial() and len(v.num.c) == 1:
            parts.append(_coeff_times(v.num.c[0], mono))
            continue
        if v.is_polynomial() and v.num.is_monomial():
            lead = v.num.lc()
            qmono = _monomial(v.num.degree, 0)
            piece = _coeff_times(lead, qmono + ("*" + mono if mono else ""))
            parts.append(piece)
            continue
        vs = render_ratfunc(v)
        if mono:
            parts.append("(%s)*%s" % (vs, mono) if _needs_parens(vs) or "*" in vs or "^" in vs else "%s*%s" % (vs, mono))
        else:
            parts.append("(%s)" % vs if _needs_parens(vs) else vs)
    return _join_terms(parts)


def render_operator(op, xname: str = "x") -> str:
    """A q-difference operator with polynomial coefficients."""
    if op.order < 0:
        return "0"
    parts = []
    for i in range(op.order, -1, -1):
        coeff = op.coeff(i)
        if coeff.is_zero():
            continue
        if i == 0:
            dmono = ""
        elif i == 1:
            dmono = "D"
        else:
            dmono = "D^%d" % i
        cs = render_polyx(coeff, xname)
        if not dmono:
            parts.append("(%s)" % cs if _needs_parens(cs) else cs)
        elif cs == "1":
            parts.append(dmono)
        elif cs == "-1":
            parts.append("-" + dmono)
        elif _needs_parens(cs):
            parts.append("(%s)*%s" % (cs, dmono))
        else:
            parts.append("%s*%s" % (cs, dmono))
    return _join_terms(parts)


def render_recurrence(rec) -> str:
    """Inhomogeneous recurrence: inhom part first, then f(n), f(n+1), ..."""
    parts = []
    if not rec.inhom.is_zero():
        s = render_bipoly(rec.inhom, xname="x")
        parts.append("(%s)" % s if _needs_parens(s) else s)
    for i, p in enumerate(rec.coeffs):
        if p.is_zero():
            continue
        fterm = "f(n)" if i == 0 else "f(n+%d)" % i
        s = render_bipoly(p, xname="x")
        if s == "1":
            parts.append(fterm)
        elif s == "-1":
            parts.append("-" + fterm)
        elif _needs_parens(s):
            parts.append("(%s)*%s" % (s, fterm))
        else:
            parts.append("%s*%s" % (s, fterm))
    return _join_terms(parts)


def render_factored(fp) -> str:
    from .render import _needs_parens  # self-import for clarity

    parts = []
    unit = render_ratfunc(fp.unit)
    if unit != "1" or not fp.factors:
        parts.append("(%s)" % unit if _needs_parens(unit) else unit)
    for base, mult in fp.factors:
        bs = render_bipoly(base)
        piece = "(%s)" % bs
        if mult != 1:
            piece += "^%d" % mult
        parts.append(piece)
    return "*".join(parts)

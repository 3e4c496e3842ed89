"""Bounds on R(K3, G) for G close to complete, derived from known values.

Every bound here is conditional on caller-supplied Ramsey numbers
(``KnownValues``); none are built in.  The counting arguments behind the
bounds reduce to integer inequalities in r, n, s, t, which are checked
exactly.  A ``Derivation`` records which inequality was used, with its
numbers filled in, so the output can be audited line by line.

Graph families, for a star K_{1,s} with centre c:
  T_{s+}      the star plus a pendant vertex on one leaf;
  Delta_s     the star plus an edge joining two leaves;
  D_{s,t}     two stars K_{1,s}, K_{1,t} with their centres joined.
"""

from __future__ import annotations

import os
import re
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional, Union

from .canon import canonical_form
from .family import Family, parse_family
from .graph import Graph, contains_subgraph

SCAN_LIMIT = 1000


class InsufficientAxioms(KeyError):
    """A bound needs a Ramsey number that was not supplied."""

    def __str__(self) -> str:
        return f"insufficient axioms: need {self.args[0]}"


class KnownValues:
    """Caller-supplied R(K3, H) values, looked up by name or up to isomorphism."""

    def __init__(self, values: Union[Mapping[str, int], Iterable[tuple[str, int]], None] = None) -> None:
        self._by_key: dict[tuple[int, ...], tuple[str, int]] = {}
        self.entries: list[tuple[str, Graph, int]] = []
        items = values.items() if isinstance(values, Mapping) else (values or [])
        for name, r in items:
            self.add(name, int(r))

    def add(self, name: str, r: int, g: Optional[Graph] = None) -> None:
        if g is None:
            g = parse_family(name).graph
        self.entries.append((name, g, r))
        self._by_key[canonical_form(g).key] = (name, r)

    @classmethod
    def from_tsv(cls, path: Union[str, os.PathLike]) -> KnownValues:
        out = cls()
        with open(path) as fh:
            for line in fh:
                line = line.strip()
                if not line or line.startswith("#"):
                    continue
                name, value = line.split("\t")[:2] if "\t" in line else line.split()[:2]
                out.add(name, int(value))
        return out

    def get(self, g: Union[str, Graph]) -> Optional[tuple[str, int]]:
        if isinstance(g, str):
            g = parse_family(g).graph
        return self._by_key.get(canonical_form(g).key)

    def require(self, name: str) -> int:
        hit = self.get(name)
        if hit is None:
            raise InsufficientAxioms(f"R(K3,{name})")
        return hit[1]

    def __len__(self) -> int:
        return len(self.entries)


def _as_known(known: Union[KnownValues, Mapping[str, int], None]) -> KnownValues:
    return known if isinstance(known, KnownValues) else KnownValues(known)


# ---------------------------------------------------------------------------
# Hypothesis checkers.  All pure integer arithmetic.


def _check_s(n: int, s: int) -> None:
    if not 1 <= s < n:
        raise ValueError(f"need 1 <= s < n, got s={s}, n={n}")


def lemma1_hypothesis(r: int, n: int, s: int) -> bool:
    """Star lemma: if M^c has K_{n-1} then it has K_n - K_{1,s}, given (r-n)(s+1) > (n-1)(n-2)."""
    _check_s(n, s)
    return (r - n) * (s + 1) > (n - 1) * (n - 2)


def prop_delta_implication(r: int, n: int, s: int) -> bool:
    """True when every triangle-free M on r vertices with K_n - Delta_{s+1} in M^c also has K_n - T_{s+}."""
    _check_s(n, s)
    return (r - n) * (s + 1) > (n - 1) * (n - 2)


def tplus_conditions(r: int, n: int, s: int, r_minus_e: int) -> bool:
    return r >= r_minus_e and (r - n + 1) * s > (n - 2) * (n - 3) and (r - n) * (s + 1) > (n - 1) * (n - 2)


def prop_tplus_bound(n: int, s: int, known: Union[KnownValues, Mapping[str, int]]) -> Optional[int]:
    """Smallest r >= R(K3, K_{n-1}-e) meeting both counting inequalities; that r bounds R(K3, K_n - T_{s+})."""
    _check_s(n, s)
    base = _as_known(known).require(f"K{n - 1}-e")
    for r in range(base, SCAN_LIMIT + 1):
        if tplus_conditions(r, n, s, base):
            return r
    return None


def prop_doublestar_bound(n: int, known: Union[KnownValues, Mapping[str, int]]) -> int:
    """Bound on R(K3, K_{n+2} - D_{m,m}) with m = (n-1)//2: any r >= max(R(K3,K_n), 3n+4)."""
    base = _as_known(known).require(f"K{n}")
    return max(base, 3 * n + 4)


def doublestar_m(n: int) -> int:
    return (n - 1) // 2


def prop_two_stars_hypothesis(r: int, n: int, s: int, t: int) -> bool:
    """Conditions under which K_{n-1}-e in M^c forces K_n - K_{1,s} - K_{1,t}."""
    return (
        s + t + 2 <= n
        and s >= t > 0
        and (r - n) * (s + 1) > (n - 1) * (n - 2)
        and (r - (n - 1)) * (s + 1) > (n + 2 * (s - t) - 2) * (n - 3)
    )


def monotone_lower_bound(g: Graph, known: Union[KnownValues, Mapping[str, int]]) -> int:
    """Largest known R(K3, H) over known H contained in ``g``; 1 if none."""
    best = 1
    for _, h, r in _as_known(known).entries:
        if r > best and h.n <= g.n and contains_subgraph(g, h):
            best = r
    return best


def _lower_with_source(g: Graph, known: KnownValues) -> tuple[int, Optional[str]]:
    best, src = 1, None
    for name, h, r in known.entries:
        if r > best and h.n <= g.n and contains_subgraph(g, h):
            best, src = r, name
    return best, src


def _upper_with_source(g: Graph, known: KnownValues) -> tuple[Optional[int], Optional[str]]:
    best: Optional[int] = None
    src = None
    for name, h, r in known.entries:
        if h.n >= g.n and (best is None or r < best) and contains_subgraph(h, g):
            best, src = r, name
    return best, src


def disconnected_union_rule(
    g1: Graph, g2: Graph, known: Union[KnownValues, Mapping[Graph, int], Mapping[str, int]]
) -> Optional[int]:
    """R(K3, G1 u G2) = R(K3, G1) when R(K3, G1) - |V(G1)| >= R(K3, G2), G1 the larger-valued part."""
    r1 = _lookup(known, g1)
    r2 = _lookup(known, g2)
    if r2 > r1:
        g1, g2, r1, r2 = g2, g1, r2, r1
    if r1 - g1.n >= r2:
        return r1
    return None


def _lookup(known, g: Graph) -> int:
    if isinstance(known, KnownValues):
        hit = known.get(g)
        if hit is None:
            raise InsufficientAxioms(f"R(K3,{g})")
        return hit[1]
    key = canonical_form(g).key
    for h, r in known.items():
        hg = parse_family(h).graph if isinstance(h, str) else h
        if hg.n == g.n and canonical_form(hg).key == key:
            return r
    raise InsufficientAxioms(f"R(K3,{g})")


# ---------------------------------------------------------------------------
# Derivations for named families.


@dataclass
class Derivation:
    spec: str
    lower: int = 1
    upper: Optional[int] = None
    upper_via: str = ""
    lower_via: str = ""
    log: list[str] = field(default_factory=list)
    flags: list[str] = field(default_factory=list)

    @property
    def exact(self) -> Optional[int]:
        return self.lower if self.upper is not None and self.upper == self.lower else None

    def summary(self) -> str:
        up = "?" if self.upper is None else str(self.upper)
        ex = "?" if self.exact is None else str(self.exact)
        return f"upper={up} via {self.upper_via or 'none'}; lower={self.lower} via {self.lower_via or 'none'}; exact={ex}"

    def note(self, condition: str, instance: str, verdict: bool) -> None:
        self.log.append(f"{condition}\t{instance}\t{'holds' if verdict else 'fails'}")


def _star_lemma_upper(d: Derivation, n: int, s: int, known: KnownValues) -> None:
    base = known.require(f"K{n - 1}")
    for r in range(base, SCAN_LIMIT + 1):
        ok = lemma1_hypothesis(r, n, s)
        if ok:
            d.note("star-lemma", f"({r}-{n})({s}+1)={(r - n) * (s + 1)} > ({n}-1)({n}-2)={(n - 1) * (n - 2)}", True)
            d.upper, d.upper_via = r, f"star-lemma+R(K3,K{n - 1})"
            return
    d.flags.append("star-lemma: no r within scan limit")


def _tplus_upper(d: Derivation, n: int, s: int, known: KnownValues, via_suffix: str = "") -> None:
    base = known.require(f"K{n - 1}-e")
    r = prop_tplus_bound(n, s, known)
    if r is None:
        d.flags.append("tplus-bound: no r within scan limit")
        return
    d.note("tplus-bound", f"{r} >= R(K3,K{n - 1}-e)={base}", True)
    d.note("tplus-bound", f"({r}-{n}+1)*{s}={(r - n + 1) * s} > ({n}-2)({n}-3)={(n - 2) * (n - 3)}", True)
    d.note("tplus-bound", f"({r}-{n})({s}+1)={(r - n) * (s + 1)} > ({n}-1)({n}-2)={(n - 1) * (n - 2)}", True)
    d.upper, d.upper_via = r, f"tplus-bound+R(K3,K{n - 1}-e){via_suffix}"


def _two_stars_upper(d: Derivation, n: int, s: int, t: int, known: KnownValues) -> None:
    if s + t + 2 > n:
        d.flags.append(f"two-stars: s+t+2={s + t + 2} > n={n}, not derivable from the two-stars bound alone")
        d.note("two-stars", f"{s}+{t}+2 <= {n}", False)
        return
    base = known.require(f"K{n - 1}-e")
    for r in range(base, SCAN_LIMIT + 1):
        if prop_two_stars_hypothesis(r, n, s, t):
            lhs = (r - (n - 1)) * (s + 1)
            rhs = (n + 2 * (s - t) - 2) * (n - 3)
            d.note("two-stars", f"{r} >= R(K3,K{n - 1}-e)={base}", True)
            d.note("two-stars", f"({r}-{n})({s}+1)={(r - n) * (s + 1)} > {(n - 1) * (n - 2)}", True)
            d.note("two-stars", f"({r}-{n - 1})({s}+1)={lhs} > ({n}+2({s}-{t})-2)({n}-3)={rhs}", True)
            d.upper, d.upper_via = r, f"two-stars+R(K3,K{n - 1}-e)"
            return
    d.flags.append("two-stars: no r within scan limit")


def derive_bounds(spec: Union[str, Family], known: Union[KnownValues, Mapping[str, int]]) -> Derivation:
    """Upper and lower bounds on R(K3, G) for a named family, with a derivation log.

    Raises ``InsufficientAxioms`` if the family's bound needs a value that is
    not in ``known``.
    """
    kv = _as_known(known)
    if isinstance(spec, str):
        m = re.fullmatch(r"K(\d+)-K1,(\d+)-e", spec.strip())
        if m and int(m.group(2)) + 3 > int(m.group(1)):
            # no room for an edge disjoint from the star
            d = Derivation(spec)
            _two_stars_upper(d, int(m.group(1)), int(m.group(2)), 1, kv)
            return d
        fam = parse_family(spec)
    else:
        fam = spec
    d = Derivation(fam.spec)
    g = fam.graph
    p = fam.params
    for name, _, r in kv.entries:
        d.log.append(f"axiom\tR(K3,{name})={r}\tgiven")

    if fam.kind == "K-K1s":
        n, s = p
        _check_s(n, s)
        _star_lemma_upper(d, n, s, kv)
    elif fam.kind == "K-T":
        n, s = p
        _check_s(n, s)
        _tplus_upper(d, n, s, kv)
    elif fam.kind == "K-Delta":
        n, k = p
        s = k - 1
        _check_s(n, s)
        # T_{s+} is a subgraph of Delta_{s+1}, so K_n - Delta_{s+1} lies inside K_n - T_{s+}
        _tplus_upper(d, n, s, kv, via_suffix=f"+K{n}-Delta{k} in K{n}-T{s}+")
        if d.upper is not None:
            d.note("delta-implication", f"({d.upper}-{n})({s}+1) > ({n}-1)({n}-2)", prop_delta_implication(d.upper, n, s))
    elif fam.kind == "K-K1s-e":
        n, s = p
        _two_stars_upper(d, n, s, 1, kv)
    elif fam.kind == "K-K1s-K1t":
        n, s, t = p
        _two_stars_upper(d, n, max(s, t), min(s, t), kv)
    elif fam.kind == "K-D":
        big, s, t = p
        n = big - 2
        m = doublestar_m(n)
        if min(s, t) >= m:
            r = prop_doublestar_bound(n, kv)
            d.note("doublestar-bound", f"max(R(K3,K{n})={kv.require(f'K{n}')}, 3*{n}+4={3 * n + 4})={r}", True)
            d.note("doublestar-bound", f"m=({n}-1)//2={m} <= min({s},{t})", True)
            d.upper, d.upper_via = r, f"doublestar-bound+R(K3,K{n})"
        else:
            d.note("doublestar-bound", f"m=({n}-1)//2={m} <= min({s},{t})", False)
            d.flags.append("doublestar-bound: double star too small for the bound")

    up, src = _upper_with_source(g, kv)
    if up is not None and (d.upper is None or up < d.upper):
        d.upper, d.upper_via = up, f"G in {src}"
        d.note("monotone-upper", f"G subgraph of {src}, R(K3,{src})={up}", True)
    low, src = _lower_with_source(g, kv)
    d.lower = low
    if src is not None:
        d.lower_via = f"{src} in G"
        d.note("monotone-lower", f"{src} subgraph of G, R(K3,{src})={low}", True)
    if d.upper is not None and d.upper < d.lower:
        raise ValueError(f"inconsistent axioms: upper {d.upper} < lower {d.lower} for {fam.spec}")
    return d


COROLLARY_AXIOMS = {"K9": 36, "K9-e": 31, "K8": 28}


def corollary_table(known: Union[KnownValues, Mapping[str, int]] = COROLLARY_AXIOMS) -> list[Derivation]:
    """The order-10 family values that follow from R(K3,K9), R(K3,K9-e), R(K3,K8)."""
    kv = _as_known(known)
    specs = [f"K10-K1,{s}" for s in range(2, 10)]
    specs += [f"K10-T{s}+" for s in range(3, 9)]
    specs += [f"K10-Delta{s + 1}" for s in range(3, 9)]
    specs += [f"K10-K1,{s}-e" for s in range(3, 8)]
    specs += ["K10-D3,3"]
    return [derive_bounds(s, kv) for s in specs]

"""Cospectrality inside H: classes with equal nonzero spectrum, cospectral
mates obtained by padding with isolated vertices, and spectral determination.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .classifier import in_h
from .exact import char_poly, nonzero_part
from .families import FamilyInstance, aliases, construct, recognize
from .graph import MAX_CANONICAL, Graph, add_isolated, canonical_form, strip_isolated

F = FamilyInstance


@dataclass(frozen=True)
class NonzeroSpectrumKey:
    """char_poly(A) / x^mult_zero, constant term first."""

    coeffs: tuple[int, ...]


def nonzero_key(g: Graph) -> NonzeroSpectrumKey:
    return NonzeroSpectrumKey(nonzero_part(char_poly(g.matrix())))


def _bullets(f: FamilyInstance) -> list[list[FamilyInstance]]:
    """The equal-nonzero-spectrum groups that mention ``f`` directly."""
    out = []
    p = f.params
    if f.id == "G0":
        prod = p[0] * p[1]
        out.append([F("G0", (prod // m, m)) for m in range(1, prod + 1)
                    if prod % m == 0 and prod // m >= m])
    if f.id == "G4":
        out.append([F("G4", p), F("G5", (p[0], 2))])
    if f.id == "G5" and p[1] == 2:
        out.append([F("G4", (p[0],)), F("G5", p)])
    k3 = None
    if f.id == "G5" and p[0] == p[1] + 1 and p[1] >= 2:
        k3 = p[1]
    elif f.id == "G6" and p[0] % 2 == 0 and p[0] >= 4:
        k3 = p[0] // 2
    elif f.id == "G8" and p[0] == p[1] and p[0] >= 2:
        k3 = p[0]
    if k3 is not None:
        out.append([F("G5", (k3 + 1, k3)), F("G6", (2 * k3,)), F("G8", (k3, k3))])
    fixed = [
        [F("G6", (3,)), F("G12")],
        [F("G4", (4,)), F("G5", (4, 2)), F("G9", (1,))],
        [F("G4", (3,)), F("G5", (3, 2)), F("G6", (4,)), F("G8", (2, 2)), F("G11")],
        [F("G3"), F("G4", (2,)), F("G5", (2, 2))],
    ]
    out.extend(group for group in fixed if f in group)
    return out


def nonzero_spectrum_class(f: FamilyInstance) -> list[FamilyInstance]:
    """All catalog instances sharing the nonzero spectrum of ``f``, built from
    the listed groups and merged transitively; alternative labels of the same
    graph (e.g. CP(2) and G0(2,2)) are included."""
    seen = {f}
    todo = [f]
    while todo:
        cur = todo.pop()
        related = [g for group in _bullets(cur) for g in group] + aliases(cur)
        for g in related:
            if g not in seen:
                seen.add(g)
                todo.append(g)
    return sorted(seen, key=FamilyInstance.sort_key)


theorem6_class = nonzero_spectrum_class  # name used by the public interface


class Mate(NamedTuple):
    graph: Graph
    description: str
    family: FamilyInstance
    padding: int


def _preferred(labels):
    return min(labels, key=FamilyInstance.sort_key)


def _core_labels(g: Graph) -> tuple[Graph, int, list[FamilyInstance]]:
    if g.n > MAX_CANONICAL:
        raise ValueError(f"cospectral search supports n <= {MAX_CANONICAL}, got {g.n}")
    if not in_h(g):
        raise ValueError("graph is not in H: more than two eigenvalues outside {-2, 0}")
    core, iso = strip_isolated(g)
    labels = recognize(core) if core.n else []
    if core.n and not labels:
        raise ValueError("graph is in H but its core matches no catalog family")
    return core, iso, labels


def cospectral_mates(g: Graph) -> list[Mate]:
    """Non-isomorphic graphs in H with the same full spectrum as ``g``."""
    core, _, labels = _core_labels(g)
    if not labels:
        return []
    members: set[FamilyInstance] = set()
    for f in labels:
        members.update(nonzero_spectrum_class(f))
    own = canonical_form(g)
    found: dict = {}
    for f in sorted(members, key=FamilyInstance.sort_key):
        pad = g.n - f.order
        if pad < 0:
            continue
        mate = add_isolated(construct(f), pad)
        cert = canonical_form(mate)
        if cert == own:
            continue
        found.setdefault(cert, []).append((f, pad, mate))
    mates = []
    for entries in found.values():
        f, pad, mate = min(entries, key=lambda e: e[0].sort_key())
        desc = str(f) + (f"+{pad}K1" if pad > 1 else "+K1" if pad == 1 else "")
        mates.append(Mate(mate, desc, f, pad))
    return sorted(mates, key=lambda m: (m.padding, m.family.sort_key()))


@dataclass
class DsVerdict:
    is_ds: bool
    reason: str
    family: list[FamilyInstance]
    mates: list[Mate] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "is_ds": self.is_ds,
            "reason": self.reason,
            "family_matches": [str(f) for f in self.family],
            "mates": [{"family": m.family.id, "params": list(m.family.params),
                       "padding": m.padding, "description": m.description} for m in self.mates],
        }


def is_ds(g: Graph) -> DsVerdict:
    """Decide spectral determination for a graph in H' (no isolated vertices)."""
    if g.isolated_vertices():
        raise ValueError("is_ds needs a graph without isolated vertices; "
                         "use cospectral_mates for graphs with isolated vertices")
    _, _, labels = _core_labels(g)
    mates = cospectral_mates(g)
    if not mates:
        reason = "unique-in-class"
    elif any(f.id == "G0" for f in labels) and all(m.family.id == "G0" for m in mates):
        reason = "bipartite-divisor"
    else:
        reason = "theorem6-class"
    return DsVerdict(not mates, reason, labels, mates)


def not_ds_closed_form(f: FamilyInstance) -> bool:
    """Closed-form list of H' graphs with a cospectral mate."""
    p = f.params
    if f.id == "G0":
        l, m = p
        return any((l * m) % d == 0 for d in range(m + 1, l))
    if f.id == "G4":
        return True
    if f.id == "G5" and (p[0] == p[1] + 1 or p == (4, 2)):
        return True
    if f.id == "G8" and p[0] == p[1]:
        return True
    if f.id == "CP" and p[0] == 2:  # CP(2) = K_{2,2}
        return False
    return f.id in ("G3", "G11", "G12")

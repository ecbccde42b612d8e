"""Closed-form regularity of (powers of) edge ideals.

Forests: reg = nu + 1.  Cycles: reg = floor(n/3) + 1, plus 1 more when
n = 2 mod 3.  Connected unicyclic graphs with trees attached: reg = nu + 2
exactly when the cycle length is 2 mod 3 and pruning the gamma layer keeps
the induced matching number; otherwise reg = nu + 1.  Powers grow linearly
from s = 1: reg(I^s) = 2s + reg(I) - 2 for unicyclic graphs, with the
forest/cycle variants 2s + nu - 1 (cycles only from s = 2).
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import (
    CYCLE,
    FOREST,
    OTHER,
    UNICYCLIC,
    classify,
    connected_components,
    delete_vertices,
    unicyclic_decomposition,
)
from .matching import induced_matching_number

BRANCH_FOREST = "forest"
BRANCH_CYCLE_MOD01 = "cycle-mod0/1"
BRANCH_CYCLE_MOD2 = "cycle-mod2"
BRANCH_NU_PLUS_1 = "unicyclic-nu-plus-1"
BRANCH_NU_PLUS_2 = "unicyclic-nu-plus-2"


class UnsupportedGraphError(ValueError):
    """No closed form applies (bicyclic and beyond, or two cyclic pieces)."""


@dataclass(frozen=True)
class RegularityReport:
    """Per-graph record of the classification and the predicted values."""

    nu: int
    gamma: tuple  # vertex labels, sorted; empty for forests and cycles
    nu_pruned: int
    cycle_length_mod3: object  # int or None
    reg: int
    branch: str
    power_table: dict  # s -> predicted reg(I^s)
    lower_bounds: dict  # s -> 2s + nu - 1
    upper_bounds: dict  # s -> 2s + reg - 2
    isolated_dropped: tuple = field(default_factory=tuple)
    connected: bool = True

    def to_json_dict(self):
        return {
            "nu": self.nu,
            "gamma": list(self.gamma),
            "nu_pruned": self.nu_pruned,
            "cycle_length_mod3": self.cycle_length_mod3,
            "reg": self.reg,
            "branch": self.branch,
            "power_table": {str(s): v for s, v in sorted(self.power_table.items())},
            "lower_bounds": {str(s): v for s, v in sorted(self.lower_bounds.items())},
            "upper_bounds": {str(s): v for s, v in sorted(self.upper_bounds.items())},
            "isolated_dropped": list(self.isolated_dropped),
            "connected": self.connected,
        }

    def to_json(self):
        return json.dumps(self.to_json_dict(), indent=2)

    def to_text(self):
        lines = [
            f"nu(G)            = {self.nu}",
            f"Gamma(G)         = {{{', '.join(self.gamma)}}}",
            f"nu(G - Gamma)    = {self.nu_pruned}",
            f"cycle length mod 3 = {self.cycle_length_mod3 if self.cycle_length_mod3 is not None else '-'}",
            f"reg I(G)         = {self.reg}   [branch: {self.branch}]",
        ]
        if self.isolated_dropped:
            lines.append(f"isolated vertices ignored: {', '.join(self.isolated_dropped)}")
        if self.power_table:
            lines.append("  s   reg I^s   lower   upper")
            for s in sorted(self.power_table):
                lines.append(
                    f"{s:>3}   {self.power_table[s]:>7}   {self.lower_bounds[s]:>5}   {self.upper_bounds[s]:>5}"
                )
        return "\n".join(lines)


def reg_forest(g):
    """nu(G) + 1 for a forest; the edgeless graph gets reg 1 (zero ideal)."""
    if classify(g) != FOREST:
        raise UnsupportedGraphError("graph is not a forest")
    return induced_matching_number(g) + 1


def reg_cycle(n):
    """Regularity of I(C_n): floor(n/3) + 1, or + 2 when n = 2 mod 3."""
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return n // 3 + (2 if n % 3 == 2 else 1)


def _drop_isolated(g):
    isolated = [v for v in g.vertices if g.degree(v) == 0]
    if not isolated:
        return g, ()
    kept = delete_vertices(g, isolated)
    return kept, tuple(g.label(v) for v in isolated)


def _unicyclic_branch(g):
    """(nu, gamma_labels, nu_pruned, n_mod3, reg, branch) for connected unicyclic."""
    dec = unicyclic_decomposition(g)
    n = len(dec.cycle)
    nu = induced_matching_number(g)
    if not dec.trees:
        reg = reg_cycle(n)
        branch = BRANCH_CYCLE_MOD2 if n % 3 == 2 else BRANCH_CYCLE_MOD01
        return nu, (), nu, n % 3, reg, branch
    pruned = delete_vertices(g, dec.gamma)
    nu_pruned = induced_matching_number(pruned)
    if n % 3 == 2 and nu_pruned == nu:
        return nu, dec.gamma, nu_pruned, n % 3, nu + 2, BRANCH_NU_PLUS_2
    return nu, dec.gamma, nu_pruned, n % 3, nu + 1, BRANCH_NU_PLUS_1


def reg_unicyclic(g):
    """RegularityReport for a connected unicyclic graph (cycles delegate)."""
    if classify(g) not in (CYCLE, UNICYCLIC):
        raise UnsupportedGraphError("graph is not connected unicyclic")
    nu, gamma, nu_pruned, mod3, reg, branch = _unicyclic_branch(g)
    labels = tuple(sorted(g.label(v) for v in gamma))
    return RegularityReport(
        nu=nu,
        gamma=labels,
        nu_pruned=nu_pruned,
        cycle_length_mod3=mod3,
        reg=reg,
        branch=branch,
        power_table={},
        lower_bounds={},
        upper_bounds={},
    )


def reg_edge_ideal(g):
    """reg(I(G)) for any forest / cycle / unicyclic mix (one cyclic piece).

    Disjoint unions add as reg(G1 u G2) = reg(G1) + reg(G2) - 1; isolated
    vertices are ignored (they do not touch the ideal).
    """
    g, _ = _drop_isolated(g)
    if not g.edges:
        return 1
    total = 1
    for comp in connected_components(g):
        kind = classify(comp)
        if kind == FOREST:
            creg = induced_matching_number(comp) + 1
        elif kind in (CYCLE, UNICYCLIC):
            creg = _unicyclic_branch(comp)[4]
        else:
            raise UnsupportedGraphError("component is neither forest nor unicyclic")
        total += creg - 1
    return total


def reg_power(g, s):
    """Predicted reg(I(G)^s) for a forest, cycle, or connected unicyclic G."""
    if s < 1:
        raise ValueError("power must be >= 1")
    g, _ = _drop_isolated(g)
    kind = classify(g)
    if kind == FOREST:
        if not g.edges:
            raise UnsupportedGraphError("edgeless graph: power formulas do not apply")
        return 2 * s + induced_matching_number(g) - 1
    if kind == CYCLE:
        n = len(g.vertices)
        return reg_cycle(n) if s == 1 else 2 * s + n // 3 - 1
    if kind == UNICYCLIC:
        return 2 * s + _unicyclic_branch(g)[4] - 2
    if len(connected_components(g)) > 1:
        return reg_power_disconnected(g, s)
    raise UnsupportedGraphError("no closed form beyond one cycle")


def reg_power_disconnected(g, s):
    """reg(I(G)^s) for one unicyclic component plus trees (s >= 2).

    Uses 2s + reg(I(G)) - 2 with the disjoint-union sum rule for reg(I(G));
    at s = 1 that sum rule alone is the answer (the two agree).  More than
    one cyclic component is rejected: no closed form covers it.
    """
    if s < 1:
        raise ValueError("power must be >= 1")
    g, _ = _drop_isolated(g)
    if not g.edges:
        raise UnsupportedGraphError("edgeless graph: power formulas do not apply")
    comps = connected_components(g)
    kinds = [classify(c) for c in comps]
    cyclic = [k for k in kinds if k in (CYCLE, UNICYCLIC)]
    if any(k == OTHER for k in kinds):
        raise UnsupportedGraphError("component is neither forest nor unicyclic")
    if len(cyclic) > 1:
        raise UnsupportedGraphError("two cyclic components: no formula available")
    if len(comps) == 1:
        return reg_power(g, s)
    reg = reg_edge_ideal(g)
    if s == 1:
        return reg
    return 2 * s + reg - 2


def conjecture_bounds(g, s, reg_value=None, max_vars=None):
    """(2s + nu - 1, 2s + reg - 2): the general lower and conjectured upper.

    ``reg_value`` overrides the regularity (otherwise the closed form is
    used, falling back to the homological oracle for graphs outside it).
    """
    nu = induced_matching_number(g)
    if reg_value is None:
        try:
            reg_value = reg_edge_ideal(g)
        except UnsupportedGraphError:
            from .monomials import edge_ideal
            from .oracle import regularity_squarefree

            reg_value = regularity_squarefree(edge_ideal(g), max_vars=max_vars)
    return 2 * s + nu - 1, 2 * s + reg_value - 2


def analyze_graph(g, max_power=3):
    """Full RegularityReport with the power table for s = 1..max_power.

    Accepts forests, cycles, connected unicyclic graphs, and disjoint
    unions of one unicyclic piece with forests.
    """
    g2, dropped = _drop_isolated(g)
    if not g2.edges:
        return RegularityReport(
            nu=0,
            gamma=(),
            nu_pruned=0,
            cycle_length_mod3=None,
            reg=1,
            branch=BRANCH_FOREST,
            power_table={},
            lower_bounds={},
            upper_bounds={},
            isolated_dropped=dropped,
            connected=True,
        )
    comps = connected_components(g2)
    kinds = [classify(c) for c in comps]
    if any(k == OTHER for k in kinds):
        raise UnsupportedGraphError("graph has a component beyond unicyclic")
    cyclic_comps = [c for c, k in zip(comps, kinds) if k in (CYCLE, UNICYCLIC)]
    if len(cyclic_comps) > 1:
        raise UnsupportedGraphError(
            "two cyclic components: the power formula does not cover this"
        )

    nu = induced_matching_number(g2)
    if not cyclic_comps:
        branch = BRANCH_FOREST
        gamma_labels = ()
        nu_pruned = nu
        mod3 = None
        reg = nu + 1
    else:
        cyc = cyclic_comps[0]
        cnu, gamma, cpruned, mod3, creg, branch = _unicyclic_branch(cyc)
        gamma_labels = tuple(sorted(cyc.label(v) for v in gamma))
        nu_pruned = nu - cnu + cpruned
        reg = reg_edge_ideal(g2)

    connected = len(comps) == 1
    table = {}
    lower = {}
    upper = {}
    for s in range(1, max_power + 1):
        table[s] = reg_power(g2, s) if connected else reg_power_disconnected(g2, s)
        lower[s] = 2 * s + nu - 1
        upper[s] = 2 * s + reg - 2
    return RegularityReport(
        nu=nu,
        gamma=gamma_labels,
        nu_pruned=nu_pruned,
        cycle_length_mod3=mod3,
        reg=reg,
        branch=branch,
        power_table=table,
        lower_bounds=lower,
        upper_bounds=upper,
        isolated_dropped=dropped,
        connected=connected,
    )

"""Rendering of enumeration results as text, JSON, DOT, and figure files."""

import json
import textwrap


def ideal_strings(I):
    """Generator strings of the reduced basis, canonical for the ideal."""
    return [str(g) for g in I.groebner()]


def format_ideal(I):
    """Angle-bracket rendering of an ideal, with <0> for the zero ideal."""
    parts = ideal_strings(I)
    return "<%s>" % ", ".join(parts) if parts else "<0>"


def _trace_entry(round_):
    return {
        "prime": ideal_strings(round_.prime),
        "locus": ideal_strings(round_.locus),
        "cokernel": ideal_strings(round_.cokernel),
        "chain": None if round_.chain is None else ideal_strings(round_.chain),
        "steps": round_.steps,
        "components": [ideal_strings(c.ideal) for c in round_.components],
        "dropped": [ideal_strings(c.ideal) for c in round_.dropped],
        "note": round_.note,
    }


def render_json(problem, result, trace=False):
    """Serialize a result under the stable report schema."""
    ring = problem.ring
    payload = {
        "field": {"p": ring.p},
        "vars": list(ring.variables),
        "e": problem.phi.e,
        "u": str(problem.phi.u),
        "surjective": result.surjective,
        "K": {"generators": ideal_strings(result.image_radical)},
        "primes": [
            {"id": i, "generators": ideal_strings(comp.ideal),
             "certified": comp.certified}
            for i, comp in enumerate(result.primes)
        ],
        "edges": [list(edge) for edge in result.edges],
        "trace": [_trace_entry(r) for r in result.trace] if trace else [],
    }
    return json.dumps(payload, indent=2) + "\n"


def render_text(problem, result, trace=False):
    """Human-oriented tab-delimited listing of the same report."""
    ring = problem.ring
    lines = [
        "field:\tF_%d" % ring.p,
        "vars:\t%s" % ", ".join(ring.variables),
        "e:\t%d" % problem.phi.e,
        "u:\t%s" % problem.phi.u,
        "mode:\t%s" % result.mode,
        "surjective:\t%s" % ("yes" if result.surjective else "no"),
        "K:\t%s" % format_ideal(result.image_radical),
        "primes:\t%d" % len(result.primes),
    ]
    for i, comp in enumerate(result.primes):
        flag = "certified" if comp.certified else "uncertified"
        lines.append("[%d]\t%s\t%s" % (i, format_ideal(comp.ideal), flag))
    lines.append("edges:\t%d" % len(result.edges))
    for a, b in result.edges:
        lines.append("[%d] < [%d]" % (a, b))
    if trace:
        lines.append("trace:\t%d rounds" % len(result.trace))
        for round_ in result.trace:
            lines.append("round at %s" % format_ideal(round_.prime))
            lines.append("  locus:\t%s" % format_ideal(round_.locus))
            lines.append("  cokernel:\t%s" % format_ideal(round_.cokernel))
            if round_.chain is None:
                lines.append("  chain:\tnone")
            else:
                lines.append("  chain:\t%s\tsteps: %d"
                             % (format_ideal(round_.chain), round_.steps))
            for comp in round_.components:
                lines.append("  component:\t%s" % format_ideal(comp.ideal))
            for comp in round_.dropped:
                lines.append("  dropped:\t%s" % format_ideal(comp.ideal))
            if round_.note:
                lines.append("  note:\t%s" % round_.note)
    return "\n".join(lines) + "\n"


def render_dot(result):
    """Bottom-up Hasse diagram of the prime poset in DOT syntax."""
    lines = ["digraph compat {", "  rankdir=BT;"]
    for i, comp in enumerate(result.primes):
        label = format_ideal(comp.ideal).replace('"', '\\"')
        lines.append('  n%d [label="%s"];' % (i, label))
    for a, b in result.edges:
        lines.append("  n%d -> n%d;" % (a, b))
    lines.append("}")
    return "\n".join(lines) + "\n"


def _poset_levels(count, edges):
    levels = [0] * count
    for _ in range(count):
        changed = False
        for a, b in edges:
            if levels[b] < levels[a] + 1:
                levels[b] = levels[a] + 1
                changed = True
        if not changed:
            break
    return levels


def render_figure(result, path):
    """Draw the Hasse diagram of the primes and save it to a file."""
    import matplotlib
    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    count = len(result.primes)
    levels = _poset_levels(count, result.edges)
    rows = {}
    for i, level in enumerate(levels):
        rows.setdefault(level, []).append(i)
    width = max([len(row) for row in rows.values()] or [1])
    height = max(levels) + 1 if count else 1
    positions = {}
    for level, row in sorted(rows.items()):
        for k, node in enumerate(row):
            positions[node] = ((k + 1) / (len(row) + 1) * width, level)

    fig, ax = plt.subplots(figsize=(3 + 2.2 * width, 2 + 1.6 * height))
    for a, b in result.edges:
        xa, ya = positions[a]
        xb, yb = positions[b]
        ax.plot([xa, xb], [ya, yb], color="#888888", zorder=1)
    for i, comp in enumerate(result.primes):
        x, y = positions[i]
        label = "\n".join(textwrap.wrap(format_ideal(comp.ideal), 34))
        ax.text(x, y, label, ha="center", va="center", fontsize=8, zorder=2,
                bbox={"boxstyle": "round", "facecolor": "#eef3fb",
                      "edgecolor": "#4466aa"})
    ax.set_xlim(0, width + 0.5)
    ax.set_ylim(-0.6, height - 0.4 if count else 0.6)
    ax.axis("off")
    ax.set_title("compatible primes, smaller ideals below")
    fig.tight_layout()
    fig.savefig(path)
    plt.close(fig)

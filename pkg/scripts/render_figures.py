"""Write Hasse diagrams of the example rings as DOT files.

Render with graphviz, e.g. ``dot -Tpng out/figures/square.dot -o square.png``.
"""
import argparse
from pathlib import Path

from teter import build_divisor_poset, ideal_view, parse_ideal
from teter.homs import trace_view
from teter.poset import to_dot

# name -> (ideal, generators of the highlighted poset ideal, or "trace")
FIGURES = {
    "square": ("x^2, y^2", None),
    "three_gen": ("x^3, y^4, x*y^2", "x"),
    "thirteen": ("x^5, y^4, x^2*y^2, x^4*y", "trace"),
    "teter_yes": ("x^4, y^4, x^2*y^2", "trace"),
    "teter_no": ("x^3, y^3, x*y", "trace"),
}


def render(ideal_text, highlight, name):
    P = build_divisor_poset(parse_ideal(ideal_text))
    if highlight == "trace":
        view = trace_view(P)
    elif highlight:
        view = ideal_view(P, list(parse_ideal(highlight, P.ideal.names).generators))
    else:
        view = None
    return to_dot(P, view, name=name)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--out", default="out/figures")
    args = ap.parse_args(argv)
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    for name, (ideal_text, highlight) in FIGURES.items():
        path = out / f"{name}.dot"
        path.write_text(render(ideal_text, highlight, name))
        print(path)


if __name__ == "__main__":
    main()

"""Command-line entry point for the figure renderer."""

import argparse
import sys

from .dataset import DatasetError
from .render import render_many


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="figplots",
        description="Render six-panel protocol figures from simulator CSV files.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_render = sub.add_parser("render", help="render one image per dataset")
    p_render.add_argument(
        "datasets",
        nargs="+",
        metavar="dataset.csv",
        help="CSV files produced by the simulator",
    )
    p_render.add_argument(
        "--out",
        required=True,
        metavar="dir",
        help="directory that receives the PNG images",
    )
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        images = render_many(args.datasets, args.out)
    except DatasetError as exc:
        print(f"dataset error: {exc}", file=sys.stderr)
        return 1
    for image in images:
        print(f"wrote {image}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

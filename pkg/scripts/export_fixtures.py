"""Write every named fixture as an edge-list file under fixtures/."""

import argparse
from pathlib import Path

from hzcolor.fixtures import FIXTURES, fixture, fixture_filename
from hzcolor.io import format_edge_list


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", default=Path(__file__).resolve().parent.parent / "fixtures", type=Path)
    args = ap.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for name in FIXTURES:
        path = args.out / fixture_filename(name)
        path.write_text(f"# {name}\n" + format_edge_list(fixture(name)))
        print(path)


if __name__ == "__main__":
    main()

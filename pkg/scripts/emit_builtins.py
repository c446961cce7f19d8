"""Write every builtin pair as a canonical JSON file."""
import argparse
from pathlib import Path

from rinehart.fileformat import emit_pair
from rinehart.instances import BUILTIN_NAMES, builtin


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("outdir", nargs="?", default="builtins")
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    for name in BUILTIN_NAMES:
        path = out / f"{name}.json"
        path.write_text(emit_pair(builtin(name)), encoding="utf-8")
        print(path)


if __name__ == "__main__":
    main()

"""coxeter-arith 명령행 진입점."""

from __future__ import annotations

import sys

from app.cli import run


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

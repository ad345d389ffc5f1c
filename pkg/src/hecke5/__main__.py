"""Entry point for ``python -m hecke5``."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

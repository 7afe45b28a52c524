"""Entry point for python -m tunnel_slopes."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())

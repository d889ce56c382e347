"""Allow running as: python -m core"""
from core.main import main

if __name__ == "__main__":
    raise SystemExit(main())

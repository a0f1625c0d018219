"""
FidelityEq
"""

from dotenv import load_dotenv

# Environment first: logging reads LOG_TYPE / LOG_LEVEL at import time
load_dotenv()

from cli import main  # noqa: E402

if __name__ == "__main__":
    raise SystemExit(main())

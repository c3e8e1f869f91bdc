from pathlib import Path

GOLDENS = Path(__file__).parent / "goldens"


def read_panels(name: str) -> list[str]:
    """Blank-line separated grids from a golden text file."""
    text = (GOLDENS / name).read_text()
    return [p.strip() for p in text.strip().split("\n\n")]

#!/usr/bin/env python3
"""
CLI interface for the clique-powers package.
"""

import sys
from pathlib import Path

# Добавляем src в путь для импорта
sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from clique_powers.main import main as main_function


def main():
    """Main CLI entry point."""
    main_function()


if __name__ == "__main__":
    main()

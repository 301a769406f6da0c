#!/usr/bin/env python3
"""
Entry point for the clique_powers package
"""

from .main import main

if __name__ == "__main__":
    main()

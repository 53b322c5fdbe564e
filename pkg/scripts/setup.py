#!/usr/bin/env python3
"""
Setup script for the homology cylinder toolkit.
This script:
1. Creates the result directories named in config.json
2. Writes a default .env file
3. Parses every corpus input once
"""

import os
import sys

# Add the project root to the path so we can import modules
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from src.checks.run_checks import collect_inputs  # noqa: E402
from src.cli.parser import parse_input  # noqa: E402
from src.config import PROJECT_ROOT, load_config  # noqa: E402
from src.exceptions import HomocylError  # noqa: E402


def create_directories(config):
    """Create result directories."""
    print("Creating directories...")
    for path in (config["reports"]["results_dir"], "data/census"):
        os.makedirs(PROJECT_ROOT / path, exist_ok=True)
    print("Directories created successfully!")


def create_env_file():
    """Write .env with the environment overrides, unless one exists."""
    env_path = PROJECT_ROOT / ".env"
    if env_path.exists():
        print(".env already exists, leaving it alone")
        return
    with open(env_path, 'w') as f:
        f.write('''# Environment Configuration
HOMOCYL_LOG_LEVEL=WARNING
HOMOCYL_THREADS=1
''')
    print("Created .env")


def check_corpus():
    """Parse each input under data/inputs; returns the number of failures."""
    print("Parsing input corpus...")
    failures = 0
    for path in collect_inputs([str(PROJECT_ROOT / "data" / "inputs")]):
        try:
            parsed = parse_input(path)
        except (HomocylError, OSError) as e:
            print(f"  FAILED {path}: {e}")
            failures += 1
            continue
        print(f"  ok     {parsed.name} ({parsed.kind})")
    return failures


def main():
    """Main setup function"""
    print("Setting up the homology cylinder toolkit...")

    config = load_config()
    create_directories(config)
    create_env_file()
    failures = check_corpus()

    if failures:
        print(f"\nSetup finished with {failures} unparseable input(s)")
        return 1
    print("\nSetup completed successfully!")
    print("Try: python -m src.cli.app classify data/inputs/trefoil.seifert")
    print("Or run all checks with: python scripts/check_corpus.py")
    return 0


if __name__ == "__main__":
    sys.exit(main())

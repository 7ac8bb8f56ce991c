#!/usr/bin/env python
"""
Write the record manifest (schema qverify.manifest/1) to a JSON file
Usage: python scripts/export_manifest.py [output path]
"""
import json
import os
import sys

# Add the project root to the Python path
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from src.catalog.registry import manifest

DEFAULT_OUTPUT = 'manifest.json'


def main():
    output = sys.argv[1] if len(sys.argv) > 1 else DEFAULT_OUTPUT
    document = manifest()
    with open(output, 'w') as f:
        json.dump(document, f, indent=2, sort_keys=True)
        f.write('\n')
    print(f"Wrote {len(document['records'])} records to {output}")
    return 0


if __name__ == "__main__":
    sys.exit(main())

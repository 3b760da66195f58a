#!/usr/bin/env python3
"""Generate a markdown summary from a batch descend report"""

import json
import sys
from collections import Counter

path = sys.argv[1] if len(sys.argv) > 1 else 'descent-results.json'

try:
    with open(path) as f:
        data = json.load(f)

    items = data.get('payload', [])
    if not isinstance(items, list):
        items = [{'file': path, 'report': data}]

    statuses = Counter(item['report']['status'] for item in items)
    variants = Counter(
        item['report']['payload'].get('variant', 'error')
        for item in items if isinstance(item['report']['payload'], dict)
    )

    print(f"**Curves processed:** {len(items)}")
    print(f"**Overall status:** {data.get('status', 'unknown')}")
    print(", ".join(f"{status}: {count}" for status, count in sorted(statuses.items())))
    print("")

    print("### Outcomes")
    for variant, count in sorted(variants.items()):
        print(f"- **{variant}:** {count}")

    failed = [item['file'] for item in items if item['report']['status'] not in ('ok', 'math-negative')]
    if failed:
        print("")
        print("### Failures")
        for name in failed:
            print(f"- {name}")

except (OSError, ValueError, KeyError):
    print("No descent results at this time")
    sys.exit(0)

"""
Running experiments from configs
================================

Every experiment is a JSON document; the same files drive the ``lab`` command,
for instance::

    lab expansion --config demos/configs/expansion.json --format csv
"""

import json
from pathlib import Path

from sumprod.harness import rows_to_csv, run

here = Path(__file__).parent / "configs"
for name in ("expansion", "eszabo", "elekes_ronyai", "bremner"):
    config = json.loads((here / f"{name}.json").read_text())
    print(f"== {name}")
    print(rows_to_csv(run(name, config)))

print(json.dumps(run("patterns", json.loads((here / "patterns.json").read_text())), indent=1))

#!/usr/bin/env python3
"""Build a small synthetic catalog and run the exploration service.

Writes two datasets under demos/output/catalog/ and serves them on
127.0.0.1:8321 together with the browser UI (if frontend/dist has been
built; see frontend/README.md). The same catalog works with the CLI:

    tsfactors serve --data-dir demos/output/catalog --ui-dir frontend/dist

Endpoints to poke by hand while it runs:

    curl http://127.0.0.1:8321/api/datasets
    curl -X POST http://127.0.0.1:8321/api/fit \
         -d '{"dataset": "two-regions", "region": "left", "method": "dynamic", "m_f": 2}'
"""

import os

from tsfactors import SimSpec, collinear_region_pair, generate, save_epochs
from tsfactors.service import SessionCatalog, serve

HERE = os.path.dirname(os.path.abspath(__file__))
CATALOG = os.path.join(HERE, "output", "catalog")
UI_DIST = os.path.join(os.path.dirname(HERE), "frontend", "dist")

pair, regions = collinear_region_pair(
    n_per_region=10, epochs=60, n_times=1000, seed=2024, lag=5
)
save_epochs(pair, os.path.join(CATALOG, "two-regions"), regions=regions)

shifted = generate(
    SimSpec(
        kind="shifted-clusters", n=20, T=1000, seed=17,
        shifts=(((0, 10), 40),), sampling_rate=250.0,
    ),
    epochs=30,
)
save_epochs(shifted, os.path.join(CATALOG, "shifted-clusters"))

catalog = SessionCatalog()
for name in sorted(os.listdir(CATALOG)):
    catalog.add_dataset(name, os.path.join(CATALOG, name))

ui_dir = UI_DIST if os.path.isdir(UI_DIST) else None
if ui_dir:
    print(f"serving UI from {ui_dir}")
else:
    print("frontend/dist not found; serving the JSON API only")
serve(catalog, ui_dir=ui_dir)

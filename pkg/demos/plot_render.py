"""
Saving and drawing configurations
=================================

A small text format for exact points, an SVG for planar sets and a layered
text view for 3D sets.
"""

import tempfile
from pathlib import Path
from taxicab import generate_lambda, io

lam = generate_lambda(2, 2)
text = io.dumps(lam)
print(text)
assert io.loads(text) == lam

out = Path(tempfile.mkdtemp()) / "lambda_2_2.svg"
out.write_text(io.render_svg(lam, unit_px=30))
print("wrote", out)

# Three dimensions: one block per z-level.
print(io.render_layers(generate_lambda(3, 2)))

"""Post-training quantization of a student checkpoint.

FP16 halves the payload, INT8 stores one byte per weight plus a float32
scale per tensor, and the mixed scheme keeps the encoder and reward head
in FP16.  Every weight stays within the scheme's analytic error bound.

    python demos/quantization.py
"""
import tempfile
from pathlib import Path

import numpy as np

from tdopt import envs, quantizer
from tdopt.errors import FormatError
from tdopt.world_model import STUDENT, WorldModel

tasks = envs.mt5_mini()
model = WorldModel.init(STUDENT, tasks, 0)
rng = np.random.default_rng(0)
for v in model.params.values():
    v[...] = rng.normal(0, 0.1, v.shape)     # stand-in for trained weights

print(f"student: {model.parameter_count()} parameters in {len(model.params)} tensors\n")
print("scheme  payload ratio  container bytes  reduction  bound violations")
for scheme in quantizer.SCHEMES:
    q = quantizer.quantize(model, scheme)
    rep = quantizer.model_size_report(q)
    bad = quantizer.error_bound_violations(model.params, q)
    print(f"{scheme:6s}  {q.payload_bytes() / q.fp32_payload_bytes():13.4f}  {rep['quantized_bytes']:15d}"
          f"  {rep['reduction_pct']:8.1f}%  {len(bad)}")

mixed = quantizer.quantize(model, "mixed")
split = mixed.manifest()["split"]
print(f"\nmixed: {len(split['fp16'])} tensors in FP16, {len(split['int8'])} in INT8")

with tempfile.TemporaryDirectory() as d:
    path = Path(d) / "student.int8.qnt"
    blob = quantizer.save(quantizer.quantize(model, "int8"), path)
    back = quantizer.load_and_infer(path.read_bytes())
    w, w8 = model.params["dynamics.0.weight"], back.params["dynamics.0.weight"]
    rec = next(r for r in quantizer.load(path).records if r.name == "dynamics.0.weight")
    print(f"int8 container {len(blob)} bytes; dynamics.0.weight max error {np.abs(w - w8).max():.2e}"
          f" <= scale/2 = {rec.scale / 2:.2e}")
    corrupt = bytearray(blob)
    corrupt[len(blob) // 2] ^= 1
    try:
        quantizer.loads(bytes(corrupt))
    except FormatError as e:
        print(f"corrupted copy rejected: {e}")

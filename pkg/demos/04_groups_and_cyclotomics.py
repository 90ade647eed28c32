"""Exact character values in Q(zeta_N) and group validation."""

import json

from wreathsf import builtin, load_group, validate, zeta
from wreathsf.errors import ValidationFailed

w = zeta(3)
print("w =", w, " w^2 =", w * w, " 1 + w + w^2 =", 1 + w + w * w)
print("conj(w) =", w.conjugate(), " |1 + i|^2 =", (zeta(4) + 1).norm())
print("zeta_6^2 == zeta_3:", zeta(6, 2) == zeta(3))

for name in ("trivial", "z2", "z3", "z4", "s3"):
    G = builtin(name)
    print(f"{name:>7}: order {G.order}, degrees {G.degrees}, valid {validate(G).ok}")

# a hand-written spec with the inverse map left out; it is inferred
doc = {
    "name": "z3",
    "order": 3,
    "classes": [{"label": "1", "size": 1}, {"label": "g", "size": 1}, {"label": "g2", "size": 1}],
    "table": [
        [1, 1, 1],
        [1, {"conductor": 3, "coeffs": [[0, 1], [1, 1]]}, {"conductor": 3, "coeffs": [[-1, 1], [-1, 1]]}],
        [1, {"conductor": 3, "coeffs": [[-1, 1], [-1, 1]]}, {"conductor": 3, "coeffs": [[0, 1], [1, 1]]}],
    ],
}
G = load_group(json.dumps(doc))
print("inferred inverses:", [c.inverse for c in G.classes])

for c, info in zip(doc["classes"], G.classes):
    c["inverse"] = info.inverse
doc["table"][2][2] = 1
try:
    load_group(doc)
except ValidationFailed as exc:
    print("broken table rejected:", exc.report.violations[0])

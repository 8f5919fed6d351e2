"""Loading user data: a JSON document, validation, and every invariant.

Run from the repository root:  python demos/04_custom_document.py
"""

from pathlib import Path

from morsezeta import load, validate, zeta, torsion, verify_identity
from morsezeta.catalog import loads
from morsezeta.monodromy import InvalidMonodromy

here = Path(__file__).parent
rec = load(here / "data" / "twist5.json")
print(validate(rec.monodromy))
print("zeta:", zeta(rec.monodromy).rational)
print("tau: ", torsion(rec.monodromy).rational)
print(verify_identity(rec))

# A matrix that is not symplectic is rejected with an itemized report.
broken = (here / "data" / "twist5.json").read_text().replace("[1, 1, -5, -1]", "[1, 2, -5, -1]")
try:
    loads(broken)
except InvalidMonodromy as exc:
    print("rejected:")
    print(exc.report)

"""
The qsym command line
=====================

Every subcommand reads a TOML config (a path, or "-" for stdin) and
prints one JSON document.  Here the same entry point is called in-process.
"""

import io
import json
import tempfile
from pathlib import Path

from qsym.cli import run


def qsym(*argv, config=None):
    buf = io.StringIO()
    with tempfile.TemporaryDirectory() as tmp:
        if config is not None:
            path = Path(tmp) / "c.toml"
            path.write_text(config)
            argv = (*argv, "--config", str(path))
        code = run(list(argv), stdout=buf)
    return code, buf.getvalue()


# the anticommuting plane with d = 2 cannot be decided by the coprimality test
code, out = qsym("check-theorem", config="""
d = 2
[algebra]
kind = "qpoly"
n = 2
q = { "1,2" = "-1" }
""")
doc = json.loads(out)
print(code, doc["verdict"], "-", doc["explanation"])

# invariants of a bicharacter
code, out = qsym("bichar", config="""
[algebra]
n = 3
q = { "1,2" = "zeta4", "1,3" = "-1", "2,3" = "zeta4^3" }
""")
print(out)

# prime search as CSV: one row per prime with a running good fraction
code, out = qsym("prime-search", "--csv", config="""
[search]
g = ["2"]
r = 2
bound = 60
""")
print(out)

# malformed input gives exit code 2 and a JSON error document
code, out = qsym("bichar", config="[algebra]\nn = 2\nq = { \"1,2\" = \"3\" }\n")
print(code, out)

"""Driving the command line from Python: tables, a path figure and JSON reports."""

import io

from qgordon.cli import main
from qgordon.report import VerificationReport

main(["table", "d", "--range", "0..7"])
main(["path", "--L", "10", "--M", "3", "--peaks=-1,2,5"])

out = io.StringIO()
code = main(["verify", "santos", "--L-max", "8", "--format", "json"], out=out)
print("exit code", code)
for line in out.getvalue().splitlines():
    report = VerificationReport.from_json(line)
    print(report.identity_id, report.status, report.to_json() == line)

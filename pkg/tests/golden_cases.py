"""Commands whose JSON output is pinned under tests/golden.

Regenerate with ``python3 tests/golden_cases.py`` after an intended change.
"""

import subprocess
import sys
from pathlib import Path

HERE = Path(__file__).parent
DATA = HERE / "data"

CASES = {
    "stirling_1B_3": ["stirling", "--kind", "1B", "--n", "3"],
    "stirling_2_5": ["stirling", "--kind", "2", "--n", "5"],
    "faces_A_321": ["faces", "--type", "A", "--x", "3,2,1"],
    "faces_B_21_j1": ["faces", "--type", "B", "--x", "2,1", "--j", "1", "--vertices"],
    "charpoly_braid3": ["charpoly", "--arrangement", str(DATA / "braid3.txt")],
    "charpoly_typeB3": ["charpoly", "--family", "typeB", "--n", "3", "--method", "whitney"],
    "project_A_321_d2": ["project", "--type", "A", "--x", "3,2,1", "--d", "2", "--seed", "0"],
    "project_A_321_plane": ["project", "--type", "A", "--x", "3,2,1", "--d", "2",
                            "--matrix", str(DATA / "plane.txt")],
    "project_B_321_d2": ["project", "--type", "B", "--x", "3,2,1", "--d", "2", "--seed", "7"],
    "project_belt_square": ["project", "--type", "belt", "--arrangement", str(DATA / "square.txt"),
                            "--d", "1", "--seed", "3"],
    "angles_A_4": ["angles", "--type", "A", "--n", "4", "--table"],
    "angles_B_2_j0_d1": ["angles", "--type", "B", "--n", "2", "--j", "0", "--d", "1"],
    "angles_belt_boolean3": ["angles", "--type", "belt", "--family", "boolean", "--n", "3", "--table"],
}


def run_case(argv: list[str]) -> tuple[int, str]:
    out = subprocess.run([sys.executable, "-m", "beltpoly", *argv, "--no-timing"],
                         capture_output=True, text=True, check=False)
    # file paths differ between checkouts; pin them relative to the data folder
    return out.returncode, out.stdout.replace(str(DATA), "DATA")


def main() -> None:
    (HERE / "golden").mkdir(exist_ok=True)
    for name, argv in CASES.items():
        code, text = run_case(argv)
        if code != 0:
            raise SystemExit(f"{name} exited with {code}")
        (HERE / "golden" / f"{name}.json").write_text(text)
        print(f"wrote {name}")


if __name__ == "__main__":
    main()

import re
from pathlib import Path


def test_quick_start_block_executes():
    text = (Path(__file__).resolve().parent.parent / "README.md").read_text()
    match = re.search(r"## Library quick start\n\n```python\n(.*?)```", text, re.S)
    assert match, "README lost its quick start block"
    exec(compile(match.group(1), "README-quickstart", "exec"), {})

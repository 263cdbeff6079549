"""Regenerate the committed openapi.json from the live app factory."""

import json
from pathlib import Path

from temponet.server import create_app


def main() -> None:
    schema = create_app().openapi()
    out = Path(__file__).resolve().parent.parent / "openapi.json"
    out.write_text(json.dumps(schema, indent=2, sort_keys=True) + "\n")
    print(f"wrote {out} ({out.stat().st_size} bytes)")


if __name__ == "__main__":
    main()

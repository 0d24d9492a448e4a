"""SHA-256 manifests for report directories."""

import hashlib
import json
import logging
from pathlib import Path
from typing import Dict


logger = logging.getLogger(__name__)

MANIFEST_NAME = "manifest.json"


def sha256_file(file_path: Path) -> str:
    hasher = hashlib.sha256()
    with open(file_path, "rb") as f:
        for chunk in iter(lambda: f.read(65536), b""):
            hasher.update(chunk)
    return hasher.hexdigest()


def generate_manifest(output_dir: Path) -> Dict[str, str]:
    """Relative path -> hash for every emitted file, sorted by path."""
    manifest = {}
    for file_path in sorted(output_dir.rglob("*")):
        if file_path.is_file() and file_path.name != MANIFEST_NAME:
            manifest[file_path.relative_to(output_dir).as_posix()] = sha256_file(file_path)
    return manifest


def write_manifest(output_dir: Path) -> Path:
    manifest = generate_manifest(output_dir)
    path = output_dir / MANIFEST_NAME
    with open(path, "w") as f:
        json.dump(manifest, f, indent=2, sort_keys=True)
        f.write("\n")
    logger.info(f"Manifest includes {len(manifest)} files")
    return path


def verify_manifest(output_dir: Path, manifest: Dict[str, str]) -> bool:
    """True iff every listed file exists and still has its recorded hash."""
    for rel_path, expected_hash in manifest.items():
        file_path = output_dir / rel_path
        if not file_path.exists() or sha256_file(file_path) != expected_hash:
            return False
    return True

# -*- coding: utf-8 -*-

"""
degenlab IO Tools module

Loading and saving of YAML/JSON documents (local files or http URLs) and
the pydantic schemas of algebra, witness, certificate and published-result
documents.
"""

import json
import logging
from pathlib import Path
from typing import Any, Dict, Union

import requests
import yaml

logger = logging.getLogger(__name__)


def is_url(location: Union[str, Path]) -> bool:
    return isinstance(location, str) and (location.startswith('http://') or location.startswith('https://'))


def load_yaml(filepath: Union[str, Path]) -> Any:
    """
    Loads a YAML file. JSON documents load the same way.

    Parameters:
        filepath (str or Path): Path to the file or an http(s) URL.

    Returns:
        The parsed document.

    Raises:
        FileNotFoundError: If the file does not exist.
        yaml.YAMLError: If there is an error while parsing the document.
        requests.RequestException: If there is an error while making the HTTP request.
    """
    if isinstance(filepath, Path):
        filepath = str(filepath)

    if is_url(filepath):
        try:
            response = requests.get(filepath, timeout=30)
            response.raise_for_status()
            return yaml.safe_load(response.text)
        except requests.RequestException as e:
            raise requests.RequestException(f"Error fetching the YAML file from {filepath}: {e}")
        except yaml.YAMLError as e:
            raise yaml.YAMLError(f"Error parsing the YAML file from {filepath}: {e}")
    else:
        path = Path(filepath)
        if not path.exists():
            raise FileNotFoundError(f"The file {filepath} does not exist.")
        try:
            with open(path, 'r', encoding='utf-8') as file:
                return yaml.safe_load(file)
        except yaml.YAMLError as e:
            raise yaml.YAMLError(f"Error parsing the YAML file from {filepath}: {e}")


def save_yaml(data: Dict[str, Any], filepath: Union[str, Path]) -> bool:
    """
    Saves data to a YAML file, creating parent directories.

    Returns:
        bool: True if successful, False otherwise.
    """
    try:
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        with open(filepath, 'w', encoding='utf-8') as file:
            yaml.safe_dump(data, file, default_flow_style=False, sort_keys=False, allow_unicode=True)
        return True
    except OSError as e:
        logger.error(f"Error saving YAML file to {filepath}: {e}")
        return False


def dumps_json(data: Any) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(data, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def save_json(data: Any, filepath: Union[str, Path]) -> bool:
    try:
        filepath = Path(filepath)
        filepath.parent.mkdir(parents=True, exist_ok=True)
        filepath.write_text(dumps_json(data), encoding='utf-8')
        return True
    except OSError as e:
        logger.error(f"Error saving JSON file to {filepath}: {e}")
        return False


from .schemas import (  # noqa: E402
    AlgebraDocument,
    BurdeExpectation,
    WitnessDocument,
    CertificateDocument,
    PublishedVariety,
    PublishedDocument,
    load_document,
)

__all__ = [
    "is_url",
    "load_yaml",
    "save_yaml",
    "save_json",
    "dumps_json",
    "AlgebraDocument",
    "BurdeExpectation",
    "WitnessDocument",
    "CertificateDocument",
    "PublishedVariety",
    "PublishedDocument",
    "load_document",
]

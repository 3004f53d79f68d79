"""
Catalogue Manager
Module untuk mengelola operator spec bawaan dan preset float demo
"""

import json
import os
from typing import Any, Dict, List, Optional

import numpy as np

from algebra.errors import UnknownNameError
from algebra.opspec import OpSpec, load_opspec
from algebra.values import Float64, ValList
from config.settings import CATALOGUE_PREFIX, OPSPEC_DIR, OPSPEC_SUFFIX, PRESETS_FILE
from utils.logger import get_logger


class CatalogueManager:
    """Manager untuk operator spec (*.ops) dan presets.json"""

    def __init__(self, opspec_dir: str = OPSPEC_DIR, presets_file: str = PRESETS_FILE):
        """
        Initialize Catalogue Manager

        Args:
            opspec_dir: Directory berisi file *.ops
            presets_file: Path presets.json
        """
        self.opspec_dir = opspec_dir
        self.presets_file = presets_file
        self.logger = get_logger()

    def _load_json(self, filepath: str) -> Dict:
        """Load JSON file; file rusak atau hilang dianggap kosong"""
        try:
            with open(filepath, 'r', encoding='utf-8') as f:
                return json.load(f)
        except FileNotFoundError:
            self.logger.warning(f"Catalogue file not found: {filepath}")
            return {}
        except json.JSONDecodeError as e:
            self.logger.error(f"Error decoding {filepath}: {e}")
            return {}

    # === OPERATOR SPECS ===

    def list_opspecs(self) -> List[str]:
        """Nama semua operator spec bawaan, terurut"""
        if not os.path.isdir(self.opspec_dir):
            return []
        return sorted(
            name[:-len(OPSPEC_SUFFIX)] for name in os.listdir(self.opspec_dir)
            if name.endswith(OPSPEC_SUFFIX)
        )

    def opspec_path(self, name: str) -> str:
        return os.path.join(self.opspec_dir, name + OPSPEC_SUFFIX)

    def load_opspec(self, name: str) -> OpSpec:
        """
        Load operator spec bawaan berdasarkan nama

        Raises:
            UnknownNameError: nama tidak ada di catalogue
        """
        if name not in self.list_opspecs():
            raise UnknownNameError(
                f"unknown catalogue entry {name}; choose from {', '.join(self.list_opspecs())}"
            )
        return load_opspec(self.opspec_path(name))

    def load_all(self) -> Dict[str, OpSpec]:
        """Semua operator spec bawaan, key = nama"""
        return {name: self.load_opspec(name) for name in self.list_opspecs()}

    def resolve(self, reference: str) -> OpSpec:
        """
        Load dari 'catalogue:NAME' atau dari path file

        Raises:
            FileNotFoundError: path tidak ada
        """
        if reference.startswith(CATALOGUE_PREFIX):
            return self.load_opspec(reference[len(CATALOGUE_PREFIX):])
        return load_opspec(reference)

    # === FLOAT PRESETS ===

    def get_all_presets(self) -> Dict[str, Dict[str, Any]]:
        return self._load_json(self.presets_file).get('presets', {})

    def list_presets(self) -> List[str]:
        return sorted(self.get_all_presets())

    def get_float_preset(self, name: str) -> Dict[str, Any]:
        """
        Ambil definisi preset

        Raises:
            UnknownNameError: preset tidak ada
        """
        preset = self.get_all_presets().get(name)
        if preset is None:
            raise UnknownNameError(
                f"unknown preset {name}; choose from {', '.join(self.list_presets())}"
            )
        return preset

    def preset_values(self, name: str) -> ValList:
        """
        Value float dari preset: daftar eksplisit 'values', atau 'grid'
        linspace(lo, hi, points) ** power * step
        """
        preset = self.get_float_preset(name)
        if 'grid' in preset:
            grid = preset['grid']
            points = np.linspace(grid['lo'], grid['hi'], grid['points']) ** grid['power'] * grid['step']
            raw = [float(v) for v in points]
        else:
            raw = [float(v) for v in preset['values']]
        return ValList(tuple(Float64(v) for v in raw))

    def preset_parts(self, name: str) -> List[int]:
        return [int(size) for size in self.get_float_preset(name)['parts']]

    # === STATISTICS ===

    def get_statistics(self) -> Dict[str, Any]:
        """Ringkasan catalogue: jumlah spec per carrier kind dan jumlah preset"""
        kinds: Dict[str, int] = {}
        for spec in self.load_all().values():
            kind = spec.carrier_b.kind
            kinds[kind] = kinds.get(kind, 0) + 1
        return {
            'total_opspecs': len(self.list_opspecs()),
            'total_presets': len(self.list_presets()),
            'carrier_kinds': kinds,
        }


_manager_instance: Optional[CatalogueManager] = None


def get_catalogue() -> CatalogueManager:
    """Catalogue bawaan (singleton)"""
    global _manager_instance
    if _manager_instance is None:
        _manager_instance = CatalogueManager()
    return _manager_instance

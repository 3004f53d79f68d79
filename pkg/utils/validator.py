"""
Input Validator Module
Validasi flag CLI: bounds, jumlah thread, daftar value dan ukuran partisi
"""

import math
from typing import Dict, Iterable, List, Optional

from config.settings import ENV_THREADS, GUARDS


class ValidationError(Exception):
    """Satu atau lebih input tidak valid (usage error, exit 2)"""

    def __init__(self, errors: List[Dict[str, str]]):
        self.errors = list(errors)
        super().__init__('; '.join(f"{err['field']}: {err['message']}" for err in self.errors))


class InputValidator:
    """Kumpulkan semua error dulu, lalu raise sekaligus lewat raise_if_errors()"""

    def __init__(self):
        self.errors: List[Dict[str, str]] = []

    def reset_errors(self):
        self.errors = []

    def add_error(self, field: str, message: str):
        """
        Tambahkan error ke list

        Args:
            field: Nama flag yang error (tanpa --)
            message: Pesan error
        """
        self.errors.append({'field': field, 'message': message})

    def has_errors(self) -> bool:
        return len(self.errors) > 0

    def get_errors(self) -> List[Dict[str, str]]:
        return self.errors

    def get_error_messages(self) -> List[str]:
        return [f"{err['field']}: {err['message']}" for err in self.errors]

    def raise_if_errors(self):
        """
        Raises:
            ValidationError: bila ada error yang terkumpul
        """
        if self.has_errors():
            errors = list(self.errors)
            self.reset_errors()
            raise ValidationError(errors)

    # Counts and bounds

    def validate_count(self, value: Optional[int], field: str, minimum: int = 0,
                       maximum: Optional[int] = None) -> bool:
        """
        Validasi bilangan bulat dalam [minimum, maximum]

        Returns:
            True jika valid (None dianggap valid: flag tidak dipakai)
        """
        if value is None:
            return True
        if isinstance(value, bool) or not isinstance(value, int):
            self.add_error(field, f"must be an integer, got {value!r}")
            return False
        if value < minimum:
            self.add_error(field, f"must be >= {minimum}, got {value}")
            return False
        if maximum is not None and value > maximum:
            self.add_error(field, f"must be <= {maximum}, got {value}")
            return False
        return True

    def validate_bounds(self, max_parts: Optional[int] = None, max_len: Optional[int] = None,
                        image_bound: Optional[int] = None, set_bound: Optional[int] = None,
                        override_guards: bool = False) -> bool:
        """
        Validasi bounds terhadap GUARDS

        max_parts boleh melewati guard bila override_guards; guard lain keras.
        """
        valid = True
        parts_limit = None if override_guards else GUARDS['max_parts']
        valid &= self.validate_count(max_parts, 'max-parts', 1, parts_limit)
        valid &= self.validate_count(max_len, 'max-len', 0, GUARDS['max_len'])
        valid &= self.validate_count(image_bound, 'image-bound', 0, GUARDS['max_image_bound'])
        valid &= self.validate_count(set_bound, 'set-bound', 0, GUARDS['set_bound'])
        return bool(valid)

    def validate_threads(self, raw: Optional[str]) -> bool:
        """Validasi nilai NONDET_AGG_THREADS (positive integer)"""
        if raw is None or raw.strip() == '':
            return True
        try:
            value = int(raw)
        except ValueError:
            self.add_error(ENV_THREADS, f"must be a positive integer, got {raw!r}")
            return False
        if value < 1:
            self.add_error(ENV_THREADS, f"must be a positive integer, got {value}")
            return False
        return True

    # Float demo input

    def parse_float_list(self, text: str, field: str = 'values') -> List[float]:
        """
        Parse '1.0,1e16,-1e16' menjadi list float berhingga

        Returns:
            List float (kosong bila ada error; error dicatat)
        """
        values = []
        for item in self._split(text):
            try:
                value = float(item)
            except ValueError:
                self.add_error(field, f"not a number: {item!r}")
                return []
            if not math.isfinite(value):
                self.add_error(field, f"values must be finite, got {item!r}")
                return []
            values.append(value)
        if not values:
            self.add_error(field, 'needs at least one value')
        return values

    def parse_size_list(self, text: str, field: str = 'parts') -> List[int]:
        """Parse '1,1,1' menjadi list ukuran partisi"""
        sizes = []
        for item in self._split(text):
            try:
                size = int(item)
            except ValueError:
                self.add_error(field, f"not an integer: {item!r}")
                return []
            if size < 0:
                self.add_error(field, f"partition sizes must be >= 0, got {size}")
                return []
            sizes.append(size)
        return sizes

    def validate_partition_sizes(self, sizes: List[int], value_count: int,
                                 field: str = 'parts') -> bool:
        """Jumlah ukuran harus sama dengan jumlah value, paling banyak demo_max_partitions"""
        limit = GUARDS['demo_max_partitions']
        if not sizes:
            self.add_error(field, 'needs at least one partition')
            return False
        if len(sizes) > limit:
            self.add_error(field, f"at most {limit} partitions, got {len(sizes)}")
            return False
        if sum(sizes) != value_count:
            self.add_error(field, f"sizes sum to {sum(sizes)} but there are {value_count} values")
            return False
        return True

    def validate_choice(self, value: str, choices: Iterable[str], field: str) -> bool:
        choices = list(choices)
        if value not in choices:
            self.add_error(field, f"unknown {field} {value!r}; choose from {', '.join(choices)}")
            return False
        return True

    @staticmethod
    def _split(text: str) -> List[str]:
        return [item.strip() for item in text.replace(' ', ',').split(',') if item.strip()]


# Example usage
if __name__ == "__main__":
    print("=" * 70)
    print("INPUT VALIDATOR TEST")
    print("=" * 70)

    validator = InputValidator()

    print("\n1. Bounds")
    print("-" * 70)
    validator.validate_bounds(max_parts=7, max_len=2, image_bound=3)
    for message in validator.get_error_messages():
        print(f"   - {message}")

    print("\n2. Float demo input")
    print("-" * 70)
    validator.reset_errors()
    values = validator.parse_float_list('1.0,1e16,-1e16')
    sizes = validator.parse_size_list('1,1,1')
    ok = validator.validate_partition_sizes(sizes, len(values))
    print(f"   values={values} parts={sizes} valid={ok}")

    print("\n" + "=" * 70)

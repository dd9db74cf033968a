from .serialisation import format_bool, parse_bool, pascal_case_to_snake_case

__all__ = [
    "format_bool",
    "parse_bool",
    "pascal_case_to_snake_case",
]

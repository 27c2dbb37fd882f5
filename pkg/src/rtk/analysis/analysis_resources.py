from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_exception_entry="stemmer exception line {line}: expected '<surface> <stem>', got '{text}'",
    err_exception_conflict="stemmer exception line {line}: '{surface}' already maps to '{stem}'",
)

from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_template_slot="row {row}: template must contain '{slot}' exactly once, found {count}",
    err_year_template="template must contain '{slot}'",
    err_common_term_missing="row {row}: common term '{term}' does not occur in the document",
    err_grid_columns="bias correlation needs at least 3 columns, got {n}",
    err_grid_reference="no reference score for column '{column}'",
    err_grid_degenerate="bias correlation is undefined: column means or reference scores are constant",
    err_int_field="{path}:{line}: '{field}' must be an integer",
    err_number="{path}:{line}: '{value}' is not a number",
    err_char="postfix characters must be single characters, got '{char}'",
)

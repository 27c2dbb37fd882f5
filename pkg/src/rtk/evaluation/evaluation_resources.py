from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_cutoff="cutoff must be >= 1, got {k}",
    err_metric_name="unknown metric '{name}', expected one of {choices}",
    err_t_test_size="paired t-test needs at least 2 paired values, got {n}",
    err_t_test_lengths="paired samples differ in length ({a} vs {b})",
)

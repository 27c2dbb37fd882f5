from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_config_no_dir="directory '{directory}' does not exist",
    err_config_dir_exist="'{config_path}' already exists",
    err_config_no_file="config file '{path}' not found",
    err_config_parse="config file '{path}' is not valid YAML: {error}",
    err_config_not_mapping="config file '{path}' must contain a mapping at the top level",
    err_config_section="config section '{section}' must be a mapping",
    err_config_type="config key '{key}' must be {expected}, got {got}",
    err_config_range="config key '{key}' must be {rule}, got {value}",
    err_config_pattern="token pattern '{pattern}' does not compile: {error}",
    warn_config_unknown_key="config: unknown key '{key}' ignored",
    err_cli_required="missing required option {flag}",
    err_cli_range="option {flag} must be {rule}, got {value}",
    err_cli_scorer_thesaurus="scorer '{scorer}' needs a thesaurus (--thesaurus or thesaurus_path in the config)",
    err_cli_scorer_run="scorer 'external' needs --run",
    err_cli_pair_source="pass either --thesaurus or --pairs, not both",
    err_cli_probe_scorer="pass either --scorer or --scores",
    err_internal="internal error: {error}",
    err_data="{error}",
    err_words_count="--words has {got} rows for {expected} attention files",
    err_words_row="{path}:{line}: 'query_words' and 'doc_words' must be lists of strings",
    err_ltog_row="{path}:{line}: row needs 'alignments' or 'explanation_terms'",
    err_ltog_alignment="{path}:{line}: alignments must be [query term, doc term] or [query term, doc term, weight]",
    err_ltog_needs_pairs="{path}:{line}: 'explanation_terms' rows need --pairs or --thesaurus",
    err_phase1_field="{path}:{line}: '{field}' must be {expected}",
    info_created_config="created config file: {path}",
    info_coverage="{covered} of {total} queries scored by both runs",
    warn_partial_queries="{count} queries were scored on different document sets; only shared documents count",
    warn_skipped_queries="{count} queries have an undefined {metric} and were skipped: {qids}",
    warn_unjudged_queries="{count} run queries have no qrels and were skipped",
    warn_flagged_queries="{count} queries have no relevant documents and score 0",
    warn_compare_missing="{count} queries missing from the compared run were dropped from the t-test",
    warn_t_test_skipped="{metric}: {count} shared queries, the paired t-test needs at least 2 and was skipped",
    warn_triplets_skipped="{count} triplets produced no record",
    summary_ok="[OK] {command} in {elapsed:.2f}s",
    summary_failed="[ERR] {command} failed with exit code {exit_code} after {elapsed:.2f}s",
    summary_warnings="{count} warning(s)",
    verbose_hint="Use -v 2 for more information.",
)

from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_bm25_k1="k1 must be >= 0, got {k1}",
    err_bm25_b="b must be in [0, 1], got {b}",
    err_ql_mu="mu must be > 0, got {mu}",
    err_candidate_counts="candidate counts must be >= 1, got ({n_query_terms}, {n_doc_terms})",
    err_candidate_min_score="min_score must be in [0, 1], got {min_score}",
    err_thesaurus_score="score for ('{qt}', '{dt}') must be in [0, 1], got {score}",
    err_thesaurus_duplicate="duplicate thesaurus pair ('{qt}', '{dt}')",
    err_segment_span="q1 span ({start}, {end}) is not a proper non-empty span of {length} query words",
)

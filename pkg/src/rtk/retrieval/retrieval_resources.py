from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_duplicate_doc="duplicate doc_id '{doc_id}' in corpus",
    err_empty_corpus="corpus is empty",
    err_rank_k="k must be >= 1, got {k}",
    err_scorer_thesaurus="scorer '{name}' needs a thesaurus",
    err_scorer_name="unknown scorer '{name}'",
    err_pair_score_range="pair score {score} for ('{qt}', '{dt}') is outside [0, 1]",
)

from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_attn_shape="attention values must have shape (M, H, L, L), got {shape}",
    err_attn_word_ids="word_ids must have length L={L}, got {n}",
    err_attn_layout="L={L} does not match [CLS] q [SEP] d [SEP] with q_len={q_len}, d_len={d_len}",
    err_attn_specials="special tokens must sit exactly at positions {expected}, found {found}",
    err_attn_word_order="{segment} word ids must start at 0 and increase by at most 1 per token",
    err_attn_row_sums="attention rows must sum to 1 (+/- {tol}); worst deviation {worst:.3g}",
    err_attn_not_finite="attention values must be finite",
    err_query_too_short="query needs at least 2 words to partition, got {n}",
    err_doc_too_short="document needs at least 2 words, got {n}",
    err_affinity_dims="affinity is {rows}x{cols} but query has {q} words and document {d}",
    err_reduction="unknown partition reduction '{name}', expected max or sum",
    err_word_count="{segment} has {expected} words in the tensor but {got} words were supplied",
    err_pair_score_range="pair_score must be in [0, 1], got {score}",
    err_qt_in_doc="query term '{qt}' occurs in the positive document",
    err_qt_not_in_query="query term '{qt}' is not part of the analyzed query",
    err_zero_occurrences="query term '{qt}' is aligned but has no recorded occurrences",
    err_attribution="unknown attribution '{name}', expected argmax or uniform",
    warn_ltog_clipped="{count} pair score(s) exceeded 1 and were clipped",
    skip_no_free_term="no query term is absent from both documents",
    skip_no_candidate="no scored document term for '{qt}' in the {side} document",
    skip_unknown_doc="unknown document '{doc_id}'",
)

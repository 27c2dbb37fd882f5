from types import SimpleNamespace

str_resources = SimpleNamespace(
    err_file_missing="file '{path}' not found",
    err_file_unreadable="cannot read '{path}': {reason}",
    err_tsv_columns="{path}:{line}: expected {expected} tab-separated columns, got {got}",
    err_json_line="{path}:{line}: invalid JSON: {reason}",
    err_json_fields="{path}:{line}: missing field(s) {fields}",
    err_json_object="{path}:{line}: expected a JSON object",
    err_empty_field="{path}:{line}: empty {field}",
    err_duplicate_qid="{path}:{line}: duplicate qid '{qid}'",
    err_unknown_format="unknown corpus format '{fmt}', expected jsonl or tsv",
    # index file
    err_index_magic="'{path}': bad magic, not an rtk index file",
    err_index_version="'{path}': index format version {found} is not supported (expected {expected})",
    err_index_truncated="'{path}': truncated index file ({actual} of {expected} bytes)",
    err_index_checksum="'{path}': checksum failure (stored {stored:08x}, computed {computed:08x})",
    err_index_corrupt="'{path}': corrupt index payload: {reason}",
    # thesaurus
    err_thesaurus_row="{path}:{line}: malformed thesaurus row, expected 'qt<TAB>dt<TAB>score'",
    err_thesaurus_score="{path}:{line}: score '{score}' is not a number",
    err_thesaurus_range="{path}:{line}: score {score} is outside [0, 1]",
    err_thesaurus_duplicate="{path}:{line}: duplicate pair ('{qt}', '{dt}'), first seen on line {first}",
    # trec
    err_trec_run_row="{path}:{line}: expected 'qid Q0 docid rank score tag'",
    err_trec_qrels_row="{path}:{line}: expected 'qid iter docid grade'",
    err_trec_number="{path}:{line}: '{value}' is not a valid {kind}",
    err_trec_duplicate="{path}:{line}: duplicate entry for ('{qid}', '{doc_id}')",
    err_trec_grade="{path}:{line}: grade {grade} is negative",
    # attention
    err_attn_magic="'{path}': bad magic, not an attention tensor file",
    err_attn_truncated="'{path}': truncated attention file ({actual} of {expected} bytes)",
    err_attn_trailing="'{path}': {extra} unexpected trailing bytes",
    err_attn_dims="'{path}': invalid dimensions L={L} M={M} H={H} q_len={q_len} d_len={d_len}",
)

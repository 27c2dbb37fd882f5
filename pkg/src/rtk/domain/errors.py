"""Exceptions raised by pure computations when a precondition does not hold.

Loaders never raise for bad input data; they return Status lists instead.
"""


class RtkError(ValueError):
    """A data or precondition error; the cli maps it to exit code 2."""


class UnknownDocumentError(RtkError, KeyError):
    def __init__(self, doc_id: str) -> None:
        super().__init__(f"unknown doc_id '{doc_id}'")
        self.doc_id = doc_id

    def __str__(self) -> str:
        return str(self.args[0])


class MissingScoreError(RtkError, KeyError):
    def __init__(self, qid: str, doc_id: str) -> None:
        super().__init__(f"no score for pair ('{qid}', '{doc_id}')")
        self.qid = qid
        self.doc_id = doc_id

    def __str__(self) -> str:
        return str(self.args[0])

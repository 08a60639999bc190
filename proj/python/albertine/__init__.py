from albertine._albertine import census, root_count, signature_table, verify

__all__ = ["census", "root_count", "signature_table", "verify"]

from . import handlers, schemas

__all__ = ["handlers", "schemas"]

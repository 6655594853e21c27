"""HTTP service: FastAPI app factory and pydantic schemas."""

from .app import app, create_app
from .models import RunRequest, RunResponse

__all__ = ["app", "create_app", "RunRequest", "RunResponse"]

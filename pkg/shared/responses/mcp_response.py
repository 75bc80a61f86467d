"""MCP response models."""

from datetime import datetime
from typing import Any, Dict, Optional

from pydantic import BaseModel, ConfigDict, Field


class MCPResponse(BaseModel):
    """MCP response model."""

    model_config = ConfigDict(
        json_schema_extra={
            "example": {
                "success": False,
                "error": "dominance violated at position 1",
                "error_details": {"kind": "dominance", "position": 1},
                "timestamp": "2024-05-06T12:34:56.789012",
            }
        }
    )

    success: bool = True
    data: Optional[Any] = None
    error: Optional[str] = None
    error_details: Optional[Dict[str, Any]] = None
    timestamp: datetime = Field(default_factory=datetime.now)

    @classmethod
    def success_response(cls, data: Any = None) -> Dict[str, Any]:
        """Create a success response."""
        response = cls(success=True, data=data)
        return response.model_dump(mode="json", exclude_none=True)

    @classmethod
    def error_response(
        cls, error: str, error_details: Optional[Dict[str, Any]] = None
    ) -> Dict[str, Any]:
        """Create an error response."""
        response = cls(success=False, error=error, error_details=error_details)
        return response.model_dump(mode="json", exclude_none=True)

    @classmethod
    def from_exception(cls, exc: Exception) -> Dict[str, Any]:
        """Error response for an exception, with its details when it has any."""
        details = getattr(exc, "details", None)
        return cls.error_response(str(exc), details() if callable(details) else None)

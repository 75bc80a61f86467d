import logging
from typing import Any, Callable, Dict

from services.lattice.api.controllers import (
    HealthController,
    InfoController,
    MinorController,
    OracleController,
    PosetController,
    PresentationController,
    SquareController,
)

logger = logging.getLogger(__name__)


class MCPHandler:
    """Handler for MCP requests."""

    def __init__(self):
        logger.info("Initializing MCP handler")
        self.presentation_controller = PresentationController()
        self.minor_controller = MinorController()
        self.square_controller = SquareController()
        self.oracle_controller = OracleController()
        self.poset_controller = PosetController()
        self.health_controller = HealthController()
        self.info_controller = InfoController()
        self.tools: Dict[str, Callable[[Dict[str, Any]], Dict[str, Any]]] = {
            "info": self.presentation_controller.info,
            "validate": self.presentation_controller.validate,
            "bases": self.presentation_controller.bases,
            "dual": self.presentation_controller.dual,
            "sum": self.presentation_controller.direct_sum,
            "render": self.presentation_controller.render,
            "delete": self.minor_controller.delete,
            "contract": self.minor_controller.contract,
            "apply-witness": self.minor_controller.apply_witness,
            "is-minor": self.minor_controller.is_minor,
            "uniform-minor": self.minor_controller.uniform_minor,
            "squares": self.square_controller.squares,
            "pull": self.square_controller.pull,
            "glue": self.square_controller.glue,
            "check-glue-minor": self.square_controller.check_glue_minor,
            "gen": self.oracle_controller.gen,
            "branch-width": self.oracle_controller.branch_width,
            "isomorphic": self.oracle_controller.isomorphic,
            "oracle-minor": self.oracle_controller.oracle_minor,
            "find-presentation": self.oracle_controller.find_presentation,
            "antichain": self.poset_controller.antichain,
            "base-case": self.poset_controller.base_case,
        }

    async def handle_tool(self, tool_name: str, arguments: Dict[str, Any]) -> Dict[str, Any]:
        """Handle an MCP tool request."""
        logger.debug(f"Handling tool: {tool_name} with arguments: {arguments}")

        tool = self.tools.get(tool_name)
        if tool is None:
            logger.warning(f"Unknown tool requested: {tool_name}")
            raise ValueError(f"Unknown tool: {tool_name}")
        try:
            logger.info(f"Processing {tool_name}")
            return tool(arguments)
        except KeyError as e:
            logger.error(f"Missing required argument for {tool_name}: {e}")
            raise ValueError(f"Missing required argument: {e}")
        except ValueError as e:
            logger.error(f"Error handling tool {tool_name}: {e}")
            raise
        except Exception as e:
            logger.error(f"Error handling tool {tool_name}: {e}", exc_info=True)
            raise

    async def handle_resource(self, uri: str) -> Dict[str, Any]:
        """Handle an MCP resource request."""
        logger.debug(f"Handling resource: {uri}")

        try:
            if uri == "/health":
                logger.info("Processing health check")
                return self.health_controller.get_health()
            elif uri == "/info":
                logger.info("Processing info request")
                return self.info_controller.get_info()
            else:
                logger.warning(f"Unknown resource URI requested: {uri}")
                raise ValueError(f"Unknown resource URI: {uri}")
        except Exception as e:
            logger.error(f"Error handling resource {uri}: {e}", exc_info=True)
            raise


# Create a singleton instance
mcp_handler = MCPHandler()

from .queue_controller import QueueController

__all__ = ["QueueController"]

class MonitorContractException(ValueError):
    """
    Raised when a monitor operation is called outside its contract: confidence
    values out of [0, 1], a correction of a learning iteration, or events
    consumed out of order.
    """

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

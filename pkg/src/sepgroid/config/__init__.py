from sepgroid.config.config_file import ConfigFile
from sepgroid.config.session_configuration import SessionConfiguration

config = SessionConfiguration(ConfigFile())
